# Dev-only: independent high-precision evaluation of the defining formulas,
# used to freeze golden constants into the test suite. Not part of the package.
import mpmath as mp

mp.mp.dps = 50


def k_of(lu):
    return 1 / (mp.log(2 - lu) / mp.log(2))


def r_of(ll):
    return -1 / (mp.log(ll) / mp.log(2))


def jc_cdf(u, v, lu, ll):
    k, r = k_of(lu), r_of(ll)
    tu = 1 - (1 - u) ** k
    tv = 1 - (1 - v) ** k
    s = tu ** (-r) + tv ** (-r) - 1
    return 1 - (1 - s ** (-1 / r)) ** (1 / k)


def sjc_cdf(u, v, lu, ll, swap=True):
    if swap:
        refl = jc_cdf(1 - u, 1 - v, ll, lu)
    else:
        refl = jc_cdf(1 - u, 1 - v, lu, ll)
    return mp.mpf("0.5") * (jc_cdf(u, v, lu, ll) + refl + u + v - 1)


def jc_pdf(u, v, lu, ll):
    f = lambda x, y: jc_cdf(x, y, lu, ll)
    return mp.diff(f, (u, v), (1, 1))


def sjc_pdf(u, v, lu, ll, swap=True):
    if swap:
        refl = jc_pdf(1 - u, 1 - v, ll, lu)
    else:
        refl = jc_pdf(1 - u, 1 - v, lu, ll)
    return mp.mpf("0.5") * (jc_pdf(u, v, lu, ll) + refl)


def sjc_h(u, v, lu, ll):
    f = lambda x: sjc_cdf(x, v, lu, ll)
    return mp.diff(f, u)


print("shape(0.5,0.5): k =", mp.nstr(k_of(mp.mpf("0.5")), 20), " r =", mp.nstr(r_of(mp.mpf("0.5")), 20))
print("shape(0.158,0.014): k =", mp.nstr(k_of(mp.mpf("0.158")), 20), " r =", mp.nstr(r_of(mp.mpf("0.014")), 20))
print("jc_cdf(0.5,0.5|0.3,0.2) =", mp.nstr(jc_cdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf("0.2")), 20))
print("sjc_cdf(0.25,0.75|0.3,0.1) =", mp.nstr(sjc_cdf(mp.mpf("0.25"), mp.mpf("0.75"), mp.mpf("0.3"), mp.mpf("0.1")), 20))
print("sjc_cdf(0.5,0.5|0.4,0.4) =", mp.nstr(sjc_cdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.4"), mp.mpf("0.4")), 20))
print("jc_cdf(0.5,0.5|0.4,0.4)  =", mp.nstr(jc_cdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.4"), mp.mpf("0.4")), 20))
print("jc_pdf(0.5,0.5|0.3,0.2) =", mp.nstr(jc_pdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf("0.2")), 20))
print("sjc_pdf(0.5,0.5|0.5,0.5) =", mp.nstr(sjc_pdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.5")), 20))
print("log sjc_pdf(0.5,0.5|0.5,0.5) =", mp.nstr(mp.log(sjc_pdf(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.5"))), 20))
print("sjc_pdf(0.3,0.6|0.158,0.014) =", mp.nstr(sjc_pdf(mp.mpf("0.3"), mp.mpf("0.6"), mp.mpf("0.158"), mp.mpf("0.014")), 20))
print("sjc_h(0.5,0.5|0.3,0.1) =", mp.nstr(sjc_h(mp.mpf("0.5"), mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf("0.1")), 20))
print("sjc_cdf_literal(0.25,0.75|0.3,0.1) =", mp.nstr(sjc_cdf(mp.mpf("0.25"), mp.mpf("0.75"), mp.mpf("0.3"), mp.mpf("0.1"), swap=False), 20))

# Kolmogorov asymptotic p at n=100, D=0.136
n, d = 100, mp.mpf("0.136")
p = 2 * mp.nsum(lambda kk: (-1) ** (kk - 1) * mp.e ** (-2 * kk**2 * n * d**2), [1, mp.inf])
print("KS p(n=100, D=0.136) =", mp.nstr(p, 20))
