#ifndef BOTT_H
#define BOTT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of a call.
 */
typedef enum {
  BOTT_STATUS_OK = 0,
  /*
   A yes/no query succeeded and the answer is no.
   */
  BOTT_STATUS_NEGATIVE = 1,
  BOTT_STATUS_INVALID_INPUT = 2,
  BOTT_STATUS_NOT_Z_TRIVIAL = 3,
  /*
   Reconstruction succeeded only up to the labels on root edges.
   */
  BOTT_STATUS_AMBIGUOUS = 4,
  BOTT_STATUS_INVALID_DECK = 5,
  BOTT_STATUS_OVERFLOW = 6,
  BOTT_STATUS_NULL_POINTER = 7,
  BOTT_STATUS_PANIC = 8,
} BottStatus;

/*
 A multiset of cards, one per root of some forest.
 */
typedef struct BottDeck BottDeck;

/*
 A Bott diagram: a rooted forest with positive edge labels.
 */
typedef struct BottForest BottForest;

/*
 A Bott tower, given by its strictly lower-triangular integer matrix.
 */
typedef struct BottTower BottTower;

/*
 Message describing the last failure on this thread, or an empty string.
 The pointer stays valid until the next call into this library on the same
 thread.
 */
const char *bott_last_error(void);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed already.
 */
void bott_string_free(char *s);

/*
 Parse a tower in the text format (`n`, then one row per stage).

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
BottStatus bott_tower_parse(const char *text, BottTower **out);

/*
 # Safety
 `t` must be null or a handle from this library, freed at most once.
 */
void bott_tower_free(BottTower *t);

/*
 # Safety
 `t` must be a valid handle; `out` must be writable.
 */
BottStatus bott_tower_to_string(const BottTower *t, char **out);

/*
 Total Chern class in the `x` generators, e.g. `1 + 4*x1 + 2*x2 + 4*x1x2`.

 # Safety
 `t` must be a valid handle; `out` must be writable.
 */
BottStatus bott_tower_total_chern(const BottTower *t, char **out);

/*
 Total Chern class rewritten in the square-zero generators `z`.

 # Safety
 `t` must be a valid handle; `out` must be writable.
 */
BottStatus bott_tower_chern_in_z_basis(const BottTower *t, char **out);

/*
 Bott diagram of a Z-trivial tower.

 # Safety
 `t` must be a valid handle; `out` must be writable.
 */
BottStatus bott_tower_diagram(const BottTower *t, BottForest **out);

/*
 Whether two Z-trivial towers are biholomorphic: `Ok` if so, `Negative`
 if not. The answer is also written to `out` when it is not null.

 # Safety
 `a` and `b` must be valid handles; `out` must be null or writable.
 */
BottStatus bott_tower_biholomorphic(const BottTower *a, const BottTower *b, bool *out);

/*
 Parse a diagram: `n`, the parent line and the label line.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
BottStatus bott_forest_parse(const char *text, BottForest **out);

/*
 # Safety
 `f` must be null or a handle from this library, freed at most once.
 */
void bott_forest_free(BottForest *f);

/*
 # Safety
 `f` must be a valid handle; `out` must be writable.
 */
BottStatus bott_forest_to_string(const BottForest *f, char **out);

/*
 Canonical code as dot-separated tokens; equal exactly for isomorphic
 forests.

 # Safety
 `f` must be a valid handle; `out` must be writable.
 */
BottStatus bott_forest_canonical_code(const BottForest *f, char **out);

/*
 Labelled isomorphism: `Ok` if isomorphic, `Negative` if not. The answer
 is also written to `out` when it is not null.

 # Safety
 `a` and `b` must be valid handles; `out` must be null or writable.
 */
BottStatus bott_forest_isomorphic(const BottForest *a, const BottForest *b, bool *out);

/*
 A Z-trivial tower whose diagram is `f`.

 # Safety
 `f` must be a valid handle; `out` must be writable.
 */
BottStatus bott_forest_tower(const BottForest *f, BottTower **out);

/*
 Deck of `f`: one card per root.

 # Safety
 `f` must be a valid handle; `out` must be writable.
 */
BottStatus bott_deck_make(const BottForest *f, BottDeck **out);

/*
 Parse a deck: the card count, then the cards separated by blank lines.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
BottStatus bott_deck_parse(const char *text, BottDeck **out);

/*
 # Safety
 `d` must be null or a handle from this library, freed at most once.
 */
void bott_deck_free(BottDeck *d);

/*
 # Safety
 `d` must be a valid handle; `out` must be writable.
 */
BottStatus bott_deck_to_string(const BottDeck *d, char **out);

/*
 Rebuild a forest from its deck.

 Returns `Ok` with the forest in `out`, or `Ambiguous` when a labelled deck
 has a single card. In that case `out` receives the tree with unknown root
 labels set to 1 and, if `unknown` is not null, it receives the 1-based
 vertices whose root-edge label is unknown, separated by spaces.

 # Safety
 `d` must be a valid handle; `out` must be writable; `unknown` must be null
 or writable.
 */
BottStatus bott_deck_reconstruct(const BottDeck *d,
                                 bool labelled,
                                 BottForest **out,
                                 char **unknown);

/*
 All diagrams on `n` vertices up to isomorphism, labels in `1..=qmax`, as a
 text stream of records separated by blank lines. `count` receives the
 number of records when not null.

 # Safety
 `out` must be writable; `count` must be null or writable.
 */
BottStatus bott_enumerate(size_t n, uint64_t qmax, char **out, size_t *count);

#endif  /* BOTT_H */
