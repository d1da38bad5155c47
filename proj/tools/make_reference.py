#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp from mpmath at 40 digits."""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-1, max_fixed=-1), mp.nstr(z.imag, 20, min_fixed=-1, max_fixed=-1))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-1, max_fixed=-1)


def w(z):
    z = mp.mpc(z)
    return mp.exp(-z * z) * mp.erfc(-1j * z)


def voigt(x, wg, wl):
    return mp.re(w(mp.mpc(x / wg, wl / wg))) / (mp.sqrt(mp.pi) * wg)


def dawson(z):
    z = mp.mpc(z)
    return mp.sqrt(mp.pi) / 2 * mp.exp(-z * z) * mp.erfi(z)


out = []
emit = out.append
emit("#pragma once")
emit("")
emit("// Generated by tools/make_reference.py (mpmath, 40 digits). Do not edit.")
emit("")
emit("#include <complex>")
emit("")
emit("namespace ref {")
emit("")
emit("struct ComplexCase {")
emit("  std::complex<double> z;")
emit("  std::complex<double> value;")
emit("};")
emit("")
emit("struct VoigtCase {")
emit("  double x, omega_g, omega_l, value;")
emit("};")
emit("")

faddeeva = [0, (1, 1), (0.5, 0.01), (5, 0.1), (-3, 2), (10, 10), (1e-3, 30), (2, -1),
            (6.2, 4.3), (0.1, 4.39), (-0.7, 0.3), (40, 1e-4), (1e-8, 1e-8), (3, -0.5)]
emit("inline const ComplexCase faddeeva_w[] = {")
for z in faddeeva:
    z = mp.mpc(*z) if isinstance(z, tuple) else mp.mpc(z)
    emit("    {%s, %s}," % (c(z), c(w(z))))
emit("};")
emit("")

emit("inline const ComplexCase erfc[] = {")
for z in [1, (1, 1), (-2, 0.5), (3, -2), (0.2, -0.1), (-1.5, -3), (6, 1)]:
    z = mp.mpc(*z) if isinstance(z, tuple) else mp.mpc(z)
    emit("    {%s, %s}," % (c(z), c(mp.erfc(z))))
emit("};")
emit("")

emit("inline const ComplexCase dawson[] = {")
for z in [1, 3, 10, 0.2, (1, 1), (2.6, 0.4), (0.3, -2), (-4, 1)]:
    z = mp.mpc(*z) if isinstance(z, tuple) else mp.mpc(z)
    emit("    {%s, %s}," % (c(z), c(dawson(z))))
emit("};")
emit("")

emit("inline const ComplexCase log_gamma[] = {")
for z in [(0.5, 40), (1, 1), (100.3, -7), (-5.5, 0.3), (0.25, 0), (-2.5, 0), (3, 0), (-0.5, -120), (1e-3, 2)]:
    z = mp.mpc(*z)
    emit("    {%s, %s}," % (c(z), c(mp.loggamma(z))))
emit("};")
emit("")

emit("inline const ComplexCase gamma[] = {")
for z in [(1, 1), (-2.5, 0), (0.5, 0), (5, 0), (3.3, -2.2), (-1.5, 0.5), (170.5, 0)]:
    z = mp.mpc(*z)
    emit("    {%s, %s}," % (c(z), c(mp.gamma(z))))
emit("};")
emit("")

emit("// 1F1(1; 3/2; z)")
emit("inline const ComplexCase kummer_1_3half[] = {")
for z in [-4, (2, 3), 0.5, (-1, -6)]:
    z = mp.mpc(*z) if isinstance(z, tuple) else mp.mpc(z)
    emit("    {%s, %s}," % (c(z), c(mp.hyp1f1(1, 1.5, z))))
emit("};")
emit("")

emit("// G^{21}_{12}[z | 1/2; 0, 1/2] = pi exp(z) erfc(sqrt z)")
emit("inline const ComplexCase meijer_g[] = {")
for z in [0.01, 1, 4, 25, (1, 1), (3, -4), (0.5, 10), (20, 20), (-3, 2)]:
    z = mp.mpc(*z) if isinstance(z, tuple) else mp.mpc(z)
    g = mp.meijerg([[0.5], []], [[0, 0.5], []], z)
    emit("    {%s, %s}," % (c(z), c(g)))
emit("};")
emit("")

emit("inline const VoigtCase voigt[] = {")
for wg, wl in [(1, 0.01), (1, 0.1), (1, 1), (1, 2), (0.3, 0.7), (2.5, 0.05)]:
    for x in [0, 0.5, 1, 2, 5, 20]:
        emit("    {%s, %s, %s, %s}," % (r(x), r(wg), r(wl), r(voigt(mp.mpf(x), mp.mpf(wg), mp.mpf(wl)))))
emit("};")
emit("")
emit("// V(0) for omega_g = omega_l = 1: e erfc(1) / sqrt(pi)")
emit("inline constexpr double voigt_origin_unit = %s;" % r(mp.e * mp.erfc(1) / mp.sqrt(mp.pi)))
emit("")
emit("}  // namespace ref")

with open("tests/reference_values.hpp", "w") as f:
    f.write("\n".join(out) + "\n")
