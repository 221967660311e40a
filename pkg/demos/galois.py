"""
The Galois connection on one and two qubits
===========================================

Subsets of the Pauli group go to the subspace they fix; subspaces go to
the group elements fixing them.  Composing the two maps only grows sets.
"""

from avnkit.pauli import PauliElement
from avnkit.semantics import isotropy_group, projector_trace, stabilised_subspace
from avnkit.subgroup import StabiliserGroup

P = PauliElement.parse

# a single Z fixes |0>, and |0> is fixed by exactly I and Z
line = stabilised_subspace([P("Z")])
print([v.format() for v in line])
print([str(p) for p in isotropy_group(line, 1)])

# X and Z together fix nothing
print(stabilised_subspace([P("X"), P("Z")]))

# a rank-1 group on two qubits fixes a plane: dimension 2^(n-k)
zz = StabiliserGroup.parse("ZZ")
plane = stabilised_subspace(zz.generators, 2)
print(len(plane), projector_trace(zz))

# closing the plane gives back exactly the group {II, ZZ}
print([str(p) for p in isotropy_group(plane, 2)])

# the Bell state: a maximal group, recovered from its state
bell = stabilised_subspace(StabiliserGroup.parse("XX,ZZ").generators, 2)
print(bell[0].format(), [str(p) for p in isotropy_group(bell, 2)])
