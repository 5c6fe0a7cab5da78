/* The public header must compile as C. */
#include <stdio.h>

#include "eqcurv/eqcurv.h"

int main(void) {
  eqc_metric* g = NULL;
  eqc_tensor* t = NULL;
  char* json = NULL;
  double tau = -1.0;
  if (eqc_metric_standard(3, 0, &g) != EQC_OK) return 1;
  if (eqc_sample("a", g, 1, 0, &t) != EQC_OK) return 1;
  if (eqc_ricci(t, g, NULL, NULL, &tau) != EQC_OK) return 1;
  if (eqc_sample_json("W6", 3, 0, 0, &json) != EQC_EMPTY_SPACE) return 1;
  printf("%s: %s\n", eqc_status_string(EQC_EMPTY_SPACE), eqc_last_error_message());
  eqc_tensor_free(t);
  eqc_metric_free(g);
  return 0;
}
