"""Gaussian periods are computed exactly in Z[zeta_p] and matched against
their closed forms."""
from fqtrace.cyclotomy import closed_form_periods, gaussian_periods, period_polynomial
from fqtrace.gf import build_field

for p, k, N in [(3, 2, 2), (2, 6, 3), (7, 3, 3), (5, 4, 4), (3, 8, 4)]:
    F = build_field(p, k)
    etas = [e.to_int() for e in gaussian_periods(F, N)]
    poly = period_polynomial(F, N)
    cf = closed_form_periods(N, p, 1, k, polynomial=poly)
    print(f"r={F.size:5d} N={N}  periods={etas}  psi={poly}")
    print(f"          case: {cf.case}; variant: {cf.selected_variant}")

# an irreducible period polynomial stays irrational
F = build_field(7, 2)
print("r=49, N=3:", period_polynomial(F, 3), [e.is_rational() for e in gaussian_periods(F, 3)])
