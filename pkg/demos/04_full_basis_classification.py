"""Complete bases: one entangled vector ruins perfect local discrimination.

For a complete orthonormal basis of an m x n system, taking the
computational-basis conjugates of the basis states as detectors at
uniform probabilities always produces a joint state that is product
across AC:BD (a unitary-times-conjugate invariance makes it two
maximally entangled pairs). The witness then certifies the moment any
basis vector is entangled, because the detector average can no longer
majorize the product source.

The classifier therefore lands in exactly two buckets:
  ALL_PRODUCT: probabilistic local discrimination works (pick a random
    Kraus pair of the von Neumann measurement), even when deterministic
    discrimination fails, as for the domino basis.
  CONTAINS_ENTANGLED: certified LOCC-indistinguishable via the witness.
"""

from locc_witness import (
    SubsystemLayout,
    bell_states,
    classify_full_basis,
    computational_basis,
    domino_basis,
    random_orthonormal_basis,
)


def describe(name, basis):
    result = classify_full_basis(basis)
    print(f"{name}:")
    print(f"  max Schmidt coefficient per vector: "
          f"{'  '.join(f'{m:.4f}' for m in result.max_schmidt)}")
    line = f"  {result.classification}"
    if result.witness is not None:
        line += f" (cross-check margin {result.witness.margin:.4f}, {result.witness.verdict})"
    print(line)
    print()


describe("computational basis of 3x3", computational_basis(SubsystemLayout.of(A=3, B=3)))
describe("domino basis of 3x3 (product but not deterministically distinguishable)",
         domino_basis())
describe("Bell basis of 2x2", bell_states())
describe("Haar-random basis of 2x3 (seed 42)",
         random_orthonormal_basis(SubsystemLayout.of(A=2, B=3), 42))
describe("Haar-random basis of 3x3 (seed 0)",
         random_orthonormal_basis(SubsystemLayout.of(A=3, B=3), 0))

print(
    "Haar-random bases essentially always contain entangled vectors, so a\n"
    "randomly drawn complete basis is virtually never locally distinguishable."
)
