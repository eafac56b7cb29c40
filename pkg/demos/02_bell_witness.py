"""The witness test, step by step, on the four Bell states.

A successful LOCC discrimination of the states on AB, followed by a
classical phone call, would convert the joint superposition into the
detector ensemble {p_i, phi_i} on CD. For pure states that conversion is
governed by majorization of Schmidt vectors (the ensemble version of
Nielsen's theorem), so comparing partial sums decides it: if the
probability-averaged detector spectrum fails to majorize the joint
state's AC:BD spectrum, no discrimination protocol can exist.
"""

from locc_witness import WitnessProblem, bell_states, check_witness


def fmt(values):
    return "  ".join(f"{v:.4f}" for v in values)


problem = WitnessProblem(
    tuple(bell_states(("A", "B"))),
    tuple(bell_states(("C", "D"))),
    (0.25, 0.25, 0.25, 0.25),
)
report = check_witness(problem)

print("States: the four Bell states. Detectors: the same Bell states on CD.")
print()
print("source spectrum (joint state, AC:BD):", fmt(report.source_schmidt))
print("target average (detectors, C:D):     ", fmt(report.target_average))
print()
print("descending partial sums")
print("  source: ", fmt(report.source_partial_sums))
print("  average:", fmt(report.average_partial_sums))
print()
print(
    f"The very first partial sum already fails: 1.0 > 0.5. The conversion\n"
    f"is forbidden with margin {report.margin:.3f}, so LOCC cannot distinguish\n"
    f"the Bell states."
)
print()
print("verdict:", report.verdict)
