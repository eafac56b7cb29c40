"""Indistinguishability witnesses for sets of orthogonal bipartite states.

The method: attach a detector state phi_i on an auxiliary CD system to
each state psi_i on AB, superpose with amplitudes sqrt(p_i), and ask
whether LOCC could convert the joint four-party state (across the AC:BD
cut) into the detector ensemble {p_i, phi_i}. A successful discrimination
protocol on AB would realize exactly that conversion, so if majorization
forbids the conversion, the set is certified LOCC-indistinguishable.

The test is one-sided: a failed witness proves nothing, hence the only
verdicts are CERTIFIED_INDISTINGUISHABLE and INCONCLUSIVE.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import maximally_entangled
from .majorization import (
    DEFAULT_TOL,
    SchmidtEnsemble,
    SchmidtVector,
    check_ensemble_conversion,
)
from .states import (
    Bipartition,
    PureState,
    SubsystemLayout,
    _split_cut,
    conjugate,
    is_product,
    permute_parts,
    relabel,
    schmidt,
    tensor,
    validate_state_set,
)

CERTIFIED_INDISTINGUISHABLE = "CERTIFIED_INDISTINGUISHABLE"
INCONCLUSIVE = "INCONCLUSIVE"
ALL_PRODUCT = "ALL_PRODUCT_PROBABILISTICALLY_DISTINGUISHABLE"
CONTAINS_ENTANGLED = "CONTAINS_ENTANGLED_LOCC_INDISTINGUISHABLE"
PROTOCOL_DISTINGUISHES = "PROTOCOL_DISTINGUISHES"
PROTOCOL_FAILS = "PROTOCOL_FAILS"

_ZERO_PROB = 1e-12


@dataclass(frozen=True)
class WitnessProblem:
    """States to distinguish, detectors, and superposition probabilities.

    States must be mutually orthonormal on a shared two-part layout;
    detectors share a two-part layout with labels disjoint from the
    states'. Detectors need not be orthogonal: orthogonality of the
    states already normalizes the joint superposition.
    """

    states: tuple[PureState, ...]
    detectors: tuple[PureState, ...]
    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "detectors", tuple(self.detectors))
        object.__setattr__(self, "probs", tuple(float(p) for p in self.probs))
        if not (len(self.states) == len(self.detectors) == len(self.probs)):
            raise ValueError(
                f"counts differ: {len(self.states)} states, "
                f"{len(self.detectors)} detectors, {len(self.probs)} probabilities"
            )
        if not self.states:
            raise ValueError("need at least one state")
        for group, name in ((self.states, "state"), (self.detectors, "detector")):
            if len(group[0].layout.parts) != 2:
                raise ValueError(f"{name} layout must have exactly two parts")
        if set(self.state_layout.labels) & set(self.detector_layout.labels):
            raise ValueError("state and detector layouts must use disjoint labels")
        rep = validate_state_set(self.states)
        if not rep.passed:
            raise ValueError(
                f"states are not orthonormal (max off-diagonal {rep.max_offdiagonal:.3g})"
            )
        for d in self.detectors[1:]:
            if d.layout != self.detectors[0].layout:
                raise ValueError("detectors must share one layout")
        if min(self.probs) < -_ZERO_PROB:
            raise ValueError(f"negative probability {min(self.probs)!r}")
        total = sum(self.probs)
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"probabilities must sum to 1 within 1e-10, got {total!r}")

    @property
    def state_layout(self) -> SubsystemLayout:
        return self.states[0].layout

    @property
    def detector_layout(self) -> SubsystemLayout:
        return self.detectors[0].layout

    def witness_cut(self) -> Bipartition:
        """The cut pairing each first part with the detectors' first part."""
        (a, _), (b, _) = self.state_layout.parts
        (c, _), (d, _) = self.detector_layout.parts
        return Bipartition((a, c), (b, d))

    def detector_cut(self) -> Bipartition:
        (c, _), (d, _) = self.detector_layout.parts
        return Bipartition((c,), (d,))

    def zero_probability_indices(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p <= _ZERO_PROB)


@dataclass(frozen=True)
class WitnessReport:
    """Verdict plus the numerical evidence behind it.

    The soundness contract: CERTIFIED_INDISTINGUISHABLE is emitted only
    when the majorization violation exceeds tol; ties go to INCONCLUSIVE.
    """

    verdict: str
    margin: float
    tol: float
    source_schmidt: SchmidtVector
    target_average: SchmidtVector
    source_partial_sums: tuple[float, ...]
    average_partial_sums: tuple[float, ...]
    problem: WitnessProblem
    warnings: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED_INDISTINGUISHABLE


def build_joint_state(problem: WitnessProblem) -> PureState:
    """The superposition sum_i sqrt(p_i) |psi_i>_AB |phi_i>_CD.

    Returned in (A, B, C, D) part order with unit norm; orthogonality of
    the psi_i makes the norm exactly 1 regardless of detector overlaps.
    """
    layout = SubsystemLayout(problem.state_layout.parts + problem.detector_layout.parts)
    amps = np.zeros(layout.dim, dtype=complex)
    for p, psi, phi in zip(problem.probs, problem.states, problem.detectors):
        if p > 0.0:
            amps += math.sqrt(p) * np.kron(psi.amplitudes, phi.amplitudes)
    joint = PureState(layout, amps)
    if abs(joint.input_norm - 1.0) > 1e-10:
        raise ValueError(f"joint state norm {joint.input_norm!r} deviates from 1 beyond 1e-10")
    return joint


def _problem_warnings(problem: WitnessProblem) -> tuple[str, ...]:
    warnings: list[str] = []
    for group, name in ((problem.states, "state"), (problem.detectors, "detector")):
        for i, s in enumerate(group):
            if abs(s.input_norm - 1.0) > 1e-6:
                warnings.append(f"{name} {i}: input norm {s.input_norm:.9g} (renormalized)")
    zero = problem.zero_probability_indices()
    if zero:
        warnings.append(
            f"probabilities below {_ZERO_PROB:g} at indices {zero}; "
            "the certificate covers only the sub-ensemble with nonzero probability"
        )
    det_matrix = np.array([d.amplitudes for d in problem.detectors])
    if np.linalg.matrix_rank(det_matrix) < len(problem.detectors):
        warnings.append("detectors are linearly dependent, which weakens the witness")
    return tuple(warnings)


def check_witness(problem: WitnessProblem, tol: float = DEFAULT_TOL) -> WitnessReport:
    """Run the majorization witness on a problem.

    Source: Schmidt vector of the joint state across AC:BD. Targets: the
    detectors' C:D Schmidt vectors, zero-padded to the source length
    (after a successful discrimination the AB side holds a known pure
    state, so all AC:BD entanglement of the outcome lives in C:D).

    Relative phases between superposition branches are part of the
    witness configuration: inputs differing by a per-state phase test a
    different (equally sound) witness and may report a different margin.
    A phase common to all states, or moved between a state and its
    detector, changes nothing.
    """
    joint = build_joint_state(problem)
    source = schmidt(joint, problem.witness_cut())
    det_cut = problem.detector_cut()
    targets = SchmidtEnsemble(
        [(p, schmidt(phi, det_cut)) for p, phi in zip(problem.probs, problem.detectors)]
    )
    conv = check_ensemble_conversion(source, targets, tol)
    verdict = INCONCLUSIVE if conv.allowed else CERTIFIED_INDISTINGUISHABLE
    average = SchmidtVector(conv.average.padded(len(source)))
    return WitnessReport(
        verdict=verdict,
        margin=conv.margin,
        tol=tol,
        source_schmidt=source,
        target_average=average,
        source_partial_sums=conv.source_partial_sums,
        average_partial_sums=conv.average_partial_sums,
        problem=problem,
        warnings=_problem_warnings(problem),
    )


def full_basis_problem(basis, detector_labels=("C", "D")) -> WitnessProblem:
    """Canonical witness for a complete orthonormal basis of an m x n system.

    Detectors are the computational-basis conjugates of the basis states
    at uniform probability 1/(mn). By construction the joint state then
    equals the product of two maximally entangled pairs across AC:BD;
    this identity is verified numerically here (to 1e-10), so the source
    Schmidt vector is (1, 0, ..., 0).
    """
    basis = list(basis)
    rep = validate_state_set(basis)
    if not rep.passed:
        raise ValueError(f"basis is not orthonormal (max off-diagonal {rep.max_offdiagonal:.3g})")
    if not rep.complete:
        raise ValueError(f"basis is incomplete: {rep.size} states in dimension {rep.dim}")
    layout = basis[0].layout
    if len(layout.parts) != 2:
        raise ValueError("full-basis witness requires a two-part layout")
    if set(detector_labels) & set(layout.labels):
        raise ValueError("detector labels collide with the basis layout")

    k = len(basis)
    detectors = [relabel(conjugate(s), detector_labels) for s in basis]
    problem = WitnessProblem(tuple(basis), tuple(detectors), (1.0 / k,) * k)

    (a, m), (b, n) = layout.parts
    c, d = detector_labels
    expected = tensor(
        maximally_entangled(m, (a, c)),
        maximally_entangled(n, (b, d)),
    )
    joint = permute_parts(build_joint_state(problem), (a, c, b, d))
    err = float(np.abs(joint.amplitudes - expected.amplitudes).max())
    if err > 1e-10:
        raise ValueError(f"joint state deviates from the product form by {err:.3g}")
    return problem


@dataclass(frozen=True)
class FullBasisReport:
    """Classification of a complete basis plus the witness cross-check."""

    classification: str
    max_schmidt: tuple[float, ...]
    witness: WitnessReport | None

    @property
    def certified(self) -> bool:
        return self.witness is not None and self.witness.certified


def classify_full_basis(basis, tol: float = DEFAULT_TOL) -> FullBasisReport:
    """Sort a complete orthonormal basis into one of two classes.

    ALL_PRODUCT_PROBABILISTICALLY_DISTINGUISHABLE when every vector is
    product across the two parts (probabilistic local discrimination by a
    random separable Kraus pair always works then); otherwise
    CONTAINS_ENTANGLED_LOCC_INDISTINGUISHABLE, with the canonical witness
    executed as a cross-check and attached to the report.
    """
    basis = list(basis)
    rep = validate_state_set(basis)
    if not rep.passed or not rep.complete:
        raise ValueError("classification requires a complete orthonormal basis")
    layout = basis[0].layout
    (a, _), (b, _) = layout.parts
    cut = Bipartition((a,), (b,))
    max_schmidt = tuple(float(schmidt(s, cut).entries[0]) for s in basis)
    if all(m >= 1.0 - tol for m in max_schmidt):
        return FullBasisReport(ALL_PRODUCT, max_schmidt, None)
    witness = check_witness(full_basis_problem(basis), tol)
    return FullBasisReport(CONTAINS_ENTANGLED, max_schmidt, witness)


def multipartite_product_check(states, tol: float = DEFAULT_TOL) -> bool:
    """True iff every state of a complete orthonormal set is fully product.

    Fully product means product across every single-part-versus-rest cut,
    i.e. of the form |eta_1>|eta_2>...|eta_N>.
    """
    states = list(states)
    rep = validate_state_set(states)
    if not rep.passed or not rep.complete:
        raise ValueError("product check requires a complete orthonormal set")
    layout = states[0].layout
    for s in states:
        for label in layout.labels:
            rest = tuple(l for l in layout.labels if l != label)
            if not is_product(s, Bipartition((label,), rest), tol):
                return False
    return True


def bipartite_cut_reduction(states, cut: Bipartition) -> list[PureState]:
    """Regroup multipartite states into two merged parts along a cut.

    A certificate of indistinguishability on the merged bipartite layout
    carries over to the original multipartite set, because separating the
    parties inside each block only restricts LOCC further.
    """
    states = list(states)
    if not states:
        raise ValueError("empty state set")
    layout = states[0].layout
    left, right = _split_cut(layout, cut)
    dl = math.prod(layout.dim_of(l) for l in left)
    dr = math.prod(layout.dim_of(l) for l in right)
    merged = SubsystemLayout((("".join(left), dl), ("".join(right), dr)))
    out = []
    for s in states:
        if s.layout != layout:
            raise ValueError("mixed layouts")
        grouped = permute_parts(s, left + right)
        out.append(PureState._wrap(merged, grouped.amplitudes))
    return out


def verify_one_way_protocol(states, measurement_basis, tol: float = DEFAULT_TOL) -> bool:
    """Check a one-round protocol: measure the first part, then communicate.

    For every measurement outcome, the (normalized) residual states left
    on the second part for outcomes of nonzero probability must be
    pairwise orthogonal; then one projective measurement plus classical
    communication perfectly distinguishes the set.
    """
    states = list(states)
    if not states:
        raise ValueError("empty state set")
    layout = states[0].layout
    if len(layout.parts) != 2:
        raise ValueError("one-way verification requires a two-part layout")
    (_, da), (_, db) = layout.parts

    basis = list(measurement_basis)
    for v in basis:
        if v.layout.dim != da:
            raise ValueError(
                f"measurement basis dimension {v.layout.dim} does not match part dimension {da}"
            )
    rep = validate_state_set(basis)
    if not rep.passed or len(basis) != da:
        raise ValueError("measurement basis must be orthonormal and span the measured part")

    matrices = [s.amplitudes.reshape(da, db) for s in states]
    for v in basis:
        residuals = []
        for m in matrices:
            r = np.conj(v.amplitudes) @ m
            weight = float(np.real(np.vdot(r, r)))
            if weight > tol:
                residuals.append(r / math.sqrt(weight))
        for i in range(len(residuals)):
            for j in range(i + 1, len(residuals)):
                if abs(np.vdot(residuals[i], residuals[j])) > tol:
                    return False
    return True
