/* cc -I include examples/smoke.c ../../target/release/libliecohom_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "liecohom.h"

int main(void) {
    LcAlgebra *g = NULL;
    if (lc_algebra_from_catalog("sl2C", 64, &g) != LC_STATUS_OK) {
        fprintf(stderr, "%s\n", lc_last_error());
        return 1;
    }
    size_t sig[3], h[4];
    bool complex = false;
    lc_killing_signature(g, sig);
    lc_has_complex_structure(g, &complex);
    LcStatus s = lc_cohomology_dims(g, LC_RELATIVE_K, 3, h, 4);
    printf("signature (%zu, %zu, %zu), complex %d, status %d, H = [%zu, %zu, %zu, %zu]\n",
           sig[0], sig[1], sig[2], complex, s, h[0], h[1], h[2], h[3]);
    lc_algebra_free(g);

    if (lc_algebra_from_catalog("nosuch", 64, &g) != LC_STATUS_UNKNOWN_ENTRY) return 1;
    printf("error: %s\n", lc_last_error());
    return h[3] == 1 ? 0 : 1;
}
