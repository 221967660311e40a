"""
Mermin's GHZ argument, computed exactly
=======================================

Build the three-qubit GHZ state from its stabiliser, read off the exact
empirical model, and let Gaussian elimination find the parity contradiction.
"""

from avnkit.pauli import PauliElement
from avnkit.semantics import empirical_model, is_strongly_contextual, stabiliser_state
from avnkit.subgroup import StabiliserGroup, elements, equation_of, is_avn, qubit_labels

# the GHZ stabiliser group and every one of its 8 elements
ghz = StabiliserGroup.parse("XXX,ZZI,IZZ")
for p in elements(ghz):
    print(f"{str(p):>5}")

# the fixed state, as a Gaussian-integer ray
state = stabiliser_state(ghz)
print(state.format())

# the four contexts used in the argument
model = empirical_model(state)
for ctx in (["x1", "x2", "x3"], ["x1", "y2", "y3"], ["y1", "x2", "y3"], ["y1", "y2", "x3"]):
    print(" ".join(ctx), "->", model.support(ctx))

# no global assignment fits every support
print("strongly contextual:", is_strongly_contextual(model))

# ...and the reason is a 4-row parity refutation
verdict = is_avn(ghz)
labels = qubit_labels(3)
for p in verdict.certificate:
    print(f"{str(p):>5}  {equation_of(p).format(labels)}")
print("sum:  0 = 1")

# flipping the sign of XXX flips all four rows, so the contradiction survives
flipped = StabiliserGroup(3, (PauliElement.parse("-XXX"),) + ghz.generators[1:])
print("AvN after flipping XXX:", bool(is_avn(flipped)))

# two qubits are never enough: the Bell pair has a global assignment
bell = is_avn(StabiliserGroup.parse("XX,ZZ"))
print("Bell pair AvN:", bool(bell), "assignment:", bell.assignment)
