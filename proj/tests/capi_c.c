#include <math.h>
#include <stdio.h>

#include "gicbound/gicbound.h"

int main(void) {
  gic_channel* ch = NULL;
  gic_bound_value v;
  if (gic_channel_symmetric(3, 0.5, 0.0, 10.0, 1, &ch) != GIC_OK) return 1;
  if (gic_bound(ch, "tdm", &v) != GIC_OK) return 1;
  gic_channel_free(ch);
  if (fabs(v.normalized - 0.825699385) > 1e-6) return 1;
  printf("%s %.9g\n", gic_version(), v.normalized);
  return 0;
}
