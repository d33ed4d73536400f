"""Regenerates tests/reference_values.hpp from mpmath at 40 digits.

The values are computed from definitions only (exact binomials, mpmath's
polylog and hypergeometric functions, mpmath quadrature at the boundary), never
from the library under test.

    python3 tests/oracle/make_reference.py > tests/reference_values.hpp
"""

from mpmath import mp, mpf, mpc, binomial, polylog, hyper, quad, fabs, log

mp.dps = 40


def series(n, m, x):
    """Sum of x^k / (k^n C(3mk, mk)) by exact term recurrence, |x| < (27/4)^m."""
    x = mpc(x)
    total = mpc(0)
    term_base = mpf(1) / binomial(3 * m, m)  # 1 / C(3m k, m k) at k = 1
    k = 1
    xk = x
    while True:
        term = xk * term_base / mpf(k) ** n
        total += term
        if fabs(term) < mpf(10) ** -45 * max(1, fabs(total)):
            return total
        # C(3m(k+1), m(k+1)) / C(3mk, mk)
        r = mpf(1)
        for j in range(1, 3 * m + 1):
            r *= 3 * m * k + j
        for j in range(1, m + 1):
            r /= m * k + j
        for j in range(1, 2 * m + 1):
            r /= 2 * m * k + j
        term_base /= r
        xk *= x
        k += 1


def boundary(n):
    """S(n,1;27/4) = int_0^1 Li_{n-1}(27/4 t (1-t)^2) / t dt, split at t = 1/3."""
    x = mpf(27) / 4

    def f(t):
        w = x * t * (1 - t) ** 2
        if n == 2:
            # 1 - w factors exactly at this x
            return -log((1 - 3 * t) ** 2 * (4 - 3 * t) / 4) / t
        return polylog(n - 1, w) / t

    return quad(f, [0, mpf(1) / 3, 1]).real


def c(v):
    v = mpc(v)
    return "%r, %r" % (float(v.real), float(v.imag))


def main():
    out = []
    out.append("// Generated by tests/oracle/make_reference.py (mpmath, 40 digits). Do not edit.")
    out.append("#pragma once\n")
    out.append("namespace ref {\n")
    out.append("struct SeriesValue {\n  int n;\n  int m;\n  double x_re, x_im;\n  double re, im;\n};\n")

    points = []
    for n in range(0, 6):
        for x in [-6, -1, mpf(-1) / 4, mpf(1) / 2, 1, 3, 6]:
            points.append((n, 1, x))
    for n in range(0, 4):
        points.append((n, 1, mpc(1, 1)))
    points += [(2, 1, mpc(-2, 3)), (2, 1, mpc(0, 4)), (3, 1, mpc(-3, -2)), (1, 1, mpc(5, 1))]
    for n in (1, 2, 3):
        for x in (-1, 1, 6, 20, -40):
            points.append((n, 2, x))
    for n in (1, 2, 3):
        for x in (-1, 1, 6, 100, -200):
            points.append((n, 3, x))
    points += [(2, 2, mpc(3, 4)), (2, 4, 500), (2, 6, -10000)]

    out.append("inline constexpr SeriesValue series[] = {")
    for n, m, x in points:
        out.append("    {%d, %d, %s, %s}," % (n, m, c(x), c(series(n, m, x))))
    out.append("};\n")

    out.append("struct BoundaryValue {\n  int n;\n  double value;\n};\n")
    out.append("/// S(n,1;27/4).")
    out.append("inline constexpr BoundaryValue boundary[] = {")
    for n in (2, 3, 4, 5):
        out.append("    {%d, %r}," % (n, float(boundary(n))))
    out.append("};\n")

    out.append("struct PolylogValue {\n  int n;\n  double z_re, z_im;\n  double re, im;\n};\n")
    out.append("inline constexpr PolylogValue polylog[] = {")
    zs = [mpc(0.3, 0), mpc(-0.7, 0), mpc(0.5, 0.5), mpc(-0.2, 0.9), mpc(0, 0.995),
          mpc(0.99, 0.1), mpc(1, 0), mpc(-1, 0), mpc(0.6, 0.8), mpc(-0.8, -0.6), mpc(0.999, 0)]
    for n in (2, 3, 4, 5):
        for z in zs:
            out.append("    {%d, %s, %s}," % (n, c(z), c(polylog(n, z))))
    for z in [mpc(0.5, 0.5), mpc(-0.3, 0.2)]:
        out.append("    {1, %s, %s}," % (c(z), c(-log(1 - z))))
    out.append("};\n")

    out.append("struct HyperValue {\n  int n;\n  double x;\n  double value;\n};\n")
    out.append("/// (x/3) pFq at 4x/27 for the S(n,1;x) parameter sets.")
    out.append("inline constexpr HyperValue hyper_values[] = {")
    for x in (-1, mpf(1) / 2, 2, 6):
        z = mpf(4) * x / 27
        v2 = x / mpf(3) * hyper([1, 1, 1, mpf(3) / 2], [mpf(4) / 3, mpf(5) / 3, 2], z)
        v1 = x / mpf(3) * hyper([1, 1, mpf(3) / 2], [mpf(4) / 3, mpf(5) / 3], z)
        v0 = x / mpf(3) * hyper([1, mpf(3) / 2, 2], [mpf(4) / 3, mpf(5) / 3], z)
        for n, v in ((2, v2), (1, v1), (0, v0)):
            out.append("    {%d, %r, %r}," % (n, float(x), float(v)))
    out.append("};\n")

    out.append("}  // namespace ref")
    print("\n".join(out))


if __name__ == "__main__":
    main()
