/* The public header must stay consumable from plain C. */
#include "qopin.h"

#include <stdio.h>
#include <string.h>

int main(void) {
  qop_relation* rel = NULL;
  if (qop_relation_parse("n 2\nreflexive\n0 1\n", &rel) != QOP_OK) {
    fprintf(stderr, "parse failed: %s\n", qop_last_error());
    return 1;
  }
  qop_props props;
  if (qop_relation_classify(rel, &props) != QOP_OK || !props.quasi_order) {
    fprintf(stderr, "classification failed\n");
    return 1;
  }
  char* text = NULL;
  if (qop_relation_serialize(rel, &text) != QOP_OK ||
      strstr(text, "n 2") == NULL) {
    fprintf(stderr, "serialization failed\n");
    return 1;
  }
  qop_string_free(text);
  qop_relation_free(rel);
  if (strcmp(qop_status_name(QOP_OK), "ok") != 0) return 1;
  return 0;
}
