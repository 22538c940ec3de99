"""Print every derived quantity for the data x = (0, 1), x~ = (2, 3)."""
from cauchykit import CauchyData, GF, alphas, build, invert, pair_from_data, solve, verify
from cauchykit.frames import BasisTag, Frame, gram, rep_X_tilde, transition

d = CauchyData((0, 1), (2, 3))
f = Frame(d)
a, at = alphas(d)
rows = [
    ("C", build(d)),
    ("alpha", [str(v) for v in a]),
    ("alpha~", [str(v) for v in at]),
    ("C^-1", invert(d)),
    ("solve C y = (1, 1)", [str(v) for v in solve(d, [1, 1])]),
    ("T  (eps -> eps~)", transition(f, BasisTag.Eps, BasisTag.EpsTilde)),
    ("T~ (eps~ -> eps)", transition(f, BasisTag.EpsTilde, BasisTag.Eps)),
    ("X~ in standard coordinates", rep_X_tilde(f)),
    ("<eps_i, eps_j>", gram(f, BasisTag.Eps, BasisTag.Eps)),
    ("<eps~_i, eps~_j>", gram(f, BasisTag.EpsTilde, BasisTag.EpsTilde)),
    ("pair verdict", verify(pair_from_data(d)).verdict),
    ("C over GF(7)", build(CauchyData((0, 1), (2, 3), GF(7)))),
]
for name, value in rows:
    print(f"{name:28} {value}")
