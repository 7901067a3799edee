#include <stdio.h>
#include <string.h>
#include "lml.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    LmlGroup *z = NULL;
    CHECK(lml_group_new_free_abelian(1, &z) == LML_STATUS_OK);

    LmlGraph *c9 = NULL, *c7 = NULL;
    CHECK(lml_graph_cycle(9, &c9) == LML_STATUS_OK);
    CHECK(lml_graph_cycle(7, &c7) == LML_STATUS_OK);
    CHECK(lml_verify(z, c9, 3, NULL) == LML_STATUS_OK);
    char *json = NULL;
    CHECK(lml_verify(z, c7, 3, &json) == LML_STATUS_NEGATIVE);
    CHECK(strstr(json, "\"accepted\": false") != NULL);
    lml_string_free(json);

    LmlGroup *bs = NULL;
    CHECK(lml_group_new_baumslag_solitar(9, 10, &bs) == LML_STATUS_OK);
    CHECK(lml_group_use_bs_generators(bs) == LML_STATUS_OK);
    CHECK(lml_group_generator_count(bs) == 10);
    bool trivial = true;
    CHECK(lml_is_identity(bs, "a b a^-1 b a b^-1 a^-1 b^-1", &trivial) == LML_STATUS_OK);
    CHECK(!trivial);
    size_t d = 0;
    CHECK(lml_distance(bs, "a b a^-1 b a b^-1 a^-1 b^-1", &d) == LML_STATUS_OK);
    CHECK(d == 6);

    CHECK(lml_is_identity(bs, "q", &trivial) == LML_STATUS_INVALID_INPUT);
    CHECK(lml_last_error() != NULL);
    printf("ok: %s\n", lml_last_error());

    lml_graph_free(c9);
    lml_graph_free(c7);
    lml_group_free(z);
    lml_group_free(bs);
    return 0;
}
