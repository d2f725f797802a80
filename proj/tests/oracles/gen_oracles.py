"""Regenerates tests/oracle_values.hpp from mpmath at 40 digits."""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1) if z.real else "0.0",
                         mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1) if z.imag else "0.0")


def r(x):
    return mp.nstr(mp.mpf(x), 20) if x else "0.0"


def i_tilde(nu, z):
    # sum (z/2)^{2k} / (k! Gamma(nu+k+1)), entire in z.
    return mp.nsum(lambda k: (z / 2) ** (2 * k) / (mp.factorial(k) * mp.gamma(nu + k + 1)), [0, mp.inf])


def laguerre(n, a, x):
    return mp.fsum((-1) ** k * mp.binomial(n + a, n - k) * mp.mpf(x) ** k / mp.factorial(k) for k in range(n + 1))


def j_tilde(nu, z):
    return i_tilde(nu, 1j * z)


out = ["// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.",
       "#pragma once", "#include <complex>", "", "namespace oracle {", "",
       "struct BesselCase { double nu; std::complex<double> z; std::complex<double> value; };"]

rows = []
for nu in [-0.5, 0, 0.5, 1, 2.5, 7]:
    for z in [0.25, 3, 17.5, 60, mp.mpc(2, 3), mp.mpc(-5, 0.5), mp.mpc(0, 12)]:
        rows.append("  {%s, %s, %s}," % (r(nu), c(z), c(i_tilde(nu, mp.mpc(z)))))
out += ["inline const BesselCase kITilde[] = {"] + rows + ["};"]

rows = []
for nu in [-0.5, 0, 0.5, 1, 2.5, 7]:
    for z in [0.25, 3, 17.5, 60, mp.mpc(2, 3), mp.mpc(0, 9)]:
        rows.append("  {%s, %s, %s}," % (r(nu), c(z), c(j_tilde(nu, mp.mpc(z)))))
out += ["inline const BesselCase kJTilde[] = {"] + rows + ["};"]

rows = []
for nu in [0, 1, 3.5, 10]:
    for z in [0.5, 8, 40, mp.mpc(1, 1)]:
        rows.append("  {%s, %s, %s}," % (r(nu), c(z), c(mp.besseli(nu, mp.mpc(z)))))
out += ["inline const BesselCase kIPlain[] = {"] + rows + ["};"]

out.append("struct PolyCase { int n; double param; double x; double value; };")
rows = []
for n in [0, 1, 3, 8, 20]:
    for a in [0, 1, 2.5, 5]:
        for x in [0.1, 2, 15, 60]:
            rows.append("  {%d, %s, %s, %s}," % (n, r(a), r(x), r(laguerre(n, a, x))))
out += ["inline const PolyCase kLaguerre[] = {"] + rows + ["};"]

rows = []
for n in [0, 1, 2, 5, 12]:
    for nu in [0.5, 1, 1.5, 4]:
        for x in [-0.9, -0.3, 0.2, 0.75, 1.0]:
            rows.append("  {%d, %s, %s, %s}," % (n, r(nu), r(x), r(mp.gamma(nu) * mp.gegenbauer(n, nu, x))))
out += ["inline const PolyCase kGegenbauerTilde[] = {"] + rows + ["};"]

out.append("struct GammaCase { double x; double gamma; double log_gamma; };")
rows = []
for x in [0.5, 1, 1.5, 3.25, 10, 33.3, 170.5]:
    rows.append("  {%s, %s, %s}," % (r(x), r(mp.gamma(x)), r(mp.loggamma(x))))
out += ["inline const GammaCase kGamma[] = {"] + rows + ["};"]

out.append("struct RadialKernelCase { int m; int l; double r; double rp; std::complex<double> t; std::complex<double> value; };")
rows = []
for m in [3, 4, 5]:
    for l in [0, 2]:
        for (x, y) in [(0.5, 1.5), (3, 2)]:
            for t in [mp.mpc(0.5, 0), mp.mpc(0.3, 0.9), mp.mpc(1.2, -2.0)]:
                nu = m - 2 + 2 * l
                sh = mp.sinh(t / 2)
                coth = mp.cosh(t / 2) / sh
                v = 2 ** (nu + 1) * (x * y) ** l * sh ** (-(m - 1 + 2 * l)) * mp.exp(-2 * (x + y) * coth) * \
                    i_tilde(nu, 4 * mp.sqrt(x * y) / sh)
                rows.append("  {%d, %d, %s, %s, %s, %s}," % (m, l, r(x), r(y), c(t), c(v)))
out += ["inline const RadialKernelCase kRadialKernel[] = {"] + rows + ["};"]

out.append("struct FullKernelCase { int m; double r; double rp; double s; std::complex<double> t; std::complex<double> value; };")
rows = []
for m in [3, 4, 5]:
    for (x, y, s) in [(0.5, 1.5, 0.3), (2, 1, -0.7)]:
        for t in [mp.mpc(0.5, 0), mp.mpc(0.3, 0.9)]:
            sh = mp.sinh(t / 2)
            coth = mp.cosh(t / 2) / sh
            psi = 2 * mp.sqrt(2 * x * y * (1 + s))
            v = 2 * mp.pi ** (-mp.mpf(m - 1) / 2) * sh ** (-(m - 1)) * mp.exp(-2 * (x + y) * coth) * \
                i_tilde(mp.mpf(m - 3) / 2, psi / sh)
            rows.append("  {%d, %s, %s, %s, %s, %s}," % (m, r(x), r(y), r(s), c(t), c(v)))
out += ["inline const FullKernelCase kFullKernel[] = {"] + rows + ["};"]

out.append("struct InversionRadialCase { int m; int l; double r; double rp; std::complex<double> value; };")
rows = []
for m in [3, 4, 5, 6]:
    for l in [0, 1, 3]:
        for (x, y) in [(0.5, 1.5), (3, 2)]:
            nu = m - 2 + 2 * l
            phase = mp.exp(-1j * mp.pi * (m - 1) / 2)
            v = 2 ** (nu + 1) * (-1) ** l * phase * (x * y) ** l * j_tilde(nu, 4 * mp.sqrt(x * y))
            rows.append("  {%d, %d, %s, %s, %s}," % (m, l, r(x), r(y), c(v)))
out += ["inline const InversionRadialCase kInversionRadial[] = {"] + rows + ["};"]

# Gauss rules: sum of weights and a moment, against closed forms.
out.append("struct MomentCase { int n; double a; double b; int k; double value; };")
rows = []
for (a, b) in [(0, 0), (0.5, 0.5), (-0.5, 1), (2, 0)]:
    for k in [0, 3, 7]:
        v = mp.quad(lambda x: (1 - x) ** a * (1 + x) ** b * x ** k, [-1, 0, 1])
        rows.append("  {16, %s, %s, %d, %s}," % (r(a), r(b), k, r(v)))
out += ["inline const MomentCase kJacobiMoments[] = {"] + rows + ["};"]

out += ["", "}  // namespace oracle", ""]
open(__file__.replace("oracles/gen_oracles.py", "oracle_values.hpp"), "w").write("\n".join(out))
