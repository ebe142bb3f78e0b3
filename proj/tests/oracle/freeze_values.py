"""Independent high-precision reference values for the C++ test suites.

Every number here comes from direct mpmath quadrature of the defining
integrals (or from elementary closed forms), never from the library's
moment formulas. Re-run with `python3 tests/oracle/freeze_values.py`.
"""
from mpmath import mp, mpf, gamma, sqrt, pi, quad, inf, atan

mp.dps = 40


def c_norm(nu):
    return gamma((nu + 1) / 2) / (gamma(nu / 2) * sqrt(pi * nu))


def pdf(x, mu, nu):
    return c_norm(nu) * (1 + (x - mu) ** 2 / nu) ** (-(nu + 1) / 2)


def half(mu, nu, p, a=0):
    return quad(lambda x: x ** p * pdf(x, mu, nu), [a, mu if mu > a else a + 1, inf])


def trunc(mu, nu, p):
    return half(mu, nu, p) / half(mu, nu, 0)


def folded(mu, nu, p):
    return half(mu, nu, p) + half(-mu, nu, p)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


mu, nu = map(mpf, (0, 2))
show("cdf(10; nu=2)", mpf(1) / 2 + 10 / (2 * sqrt(102)))
show("cdf(10; nu=2) by quad", quad(lambda x: pdf(x, 0, 2), [-inf, 0, 10]))
show("folded mean (0,3)", folded(0, mpf(3), 1))
show("2 sqrt3 / pi", 2 * sqrt(3) / pi)
show("folded mean (10,2)", folded(10, mpf(2), 1))
show("folded var (0,3)", folded(0, mpf(3), 2) - folded(0, mpf(3), 1) ** 2)
show("3 - 12/pi^2", 3 - 12 / pi ** 2)
show("folded var (20,3)", folded(20, mpf(3), 2) - folded(20, mpf(3), 1) ** 2)
show("trunc mean (-5,3)", trunc(-5, mpf(3), 1))
show("trunc mean (0,2)", trunc(0, mpf(2), 1))
show("trunc second (1,5)", trunc(1, mpf(5), 2))
show("trunc second (0,5)", trunc(0, mpf(5), 2))
for m, n in [(-1, 5), (3, 3), (-3, 3), (5, 2.5)]:
    show(f"trunc second ({m},{n})", trunc(m, mpf(n), 2))
show("trunc var (5,5)", trunc(5, mpf(5), 2) - trunc(5, mpf(5), 1) ** 2)
show("trunc var (0,2.5)", trunc(0, mpf(2.5), 2) - trunc(0, mpf(2.5), 1) ** 2)
show("trunc mean (-50,3)", trunc(-50, mpf(3), 1))
show("trunc mean (-50,3)/25", trunc(-50, mpf(3), 1) / 25)
show("trunc mean (2,5) lower=1", quad(lambda x: x * pdf(x, 2, 5), [1, 2, inf]) / quad(lambda x: pdf(x, 2, 5), [1, 2, inf]))
show("trunc second (2,5) lower=1", quad(lambda x: x * x * pdf(x, 2, 5), [1, 2, inf]) / quad(lambda x: pdf(x, 2, 5), [1, 2, inf]))
show("folded mean (3,5) sigma=2", 2 * folded(mpf(1.5), mpf(5), 1))
show("cdf(2.5; 3.7)", quad(lambda x: pdf(x, 0, mpf(3.7)), [-inf, 0, 2.5]))
show("cdf(-7; 1.3)", quad(lambda x: pdf(x, 0, mpf(1.3)), [-inf, -7]))
show("cdf(-30; 0.5)", quad(lambda x: pdf(x, 0, mpf(0.5)), [-inf, -30]))
