#pragma once

#include <random>

#include "morseposet/complex.hpp"
#include "morseposet/matching.hpp"
#include "morseposet/morse.hpp"
#include "morseposet/poset.hpp"

namespace morseposet {

using Rng = std::mt19937_64;

/// Layered random poset: covers may skip levels, so gradedness and
/// down-wideness are not guaranteed.
Poset random_poset(Rng& rng, int max_elements);

/// Layered random poset with covers only between adjacent levels and every
/// non-minimal element covering something: always graded.
Poset random_graded_poset(Rng& rng, int max_elements);

/// Random small complex; with `connected`, components get bridged.
SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_dim,
                                 bool connected);

/// Face poset of a random complex with at most `max_elements` simplices.
/// Face posets of complexes are graded, down-wide and two-wide.
Poset random_face_poset(Rng& rng, int max_elements, bool connected = false);

/// Two-wide random poset: either height one (vacuously two-wide) or a face
/// poset. The result is checked before being returned.
Poset random_two_wide_poset(Rng& rng, int max_elements);

/// Random Morse function: starts from the height function and applies
/// random Morse-preserving tie/inversion mutations on cover edges, then a
/// random positive affine change. Nothing here enforces the Exclusion
/// condition; on two-wide posets it must come out by theorem.
MorseFunction random_morse_function(Rng& rng, const Poset& p);

/// Random Morse matching: a shuffled greedy matching on the cover edges,
/// keeping only pairs that leave H_M acyclic.
Matching random_morse_matching(Rng& rng, const Poset& p);

}  // namespace morseposet
