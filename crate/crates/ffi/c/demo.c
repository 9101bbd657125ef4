#include <stdio.h>
#include "besselint.h"

int main(void) {
    BesselintTable *t = NULL;
    if (besselint_table_new(BESSELINT_KERNEL_COSH, 4, 7, &t) != BESSELINT_STATUS_OK) {
        fprintf(stderr, "%s\n", besselint_last_error_message());
        return 1;
    }
    uint32_t degree = 0;
    besselint_table_degree(t, &degree);
    for (uint32_t p = 0; p <= degree; p++) {
        char buf[64];
        besselint_table_coeff_string(t, p, buf, sizeof buf, NULL);
        printf("c_%u = %s\n", p, buf);
    }
    BesselintComplex z = {2.0, 1.0}, v;
    besselint_table_eval(t, z, &v);
    printf("F(4,7; 2+1i) = %.15e %+.15ei\n", v.re, v.im);
    besselint_table_free(t);

    if (besselint_eval(BESSELINT_KERNEL_COSH, 4, 6, z, &v) != BESSELINT_STATUS_OK)
        printf("error: %s\n", besselint_last_error_message());
    return 0;
}
