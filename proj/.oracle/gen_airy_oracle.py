#!/usr/bin/env python3
"""Generate frozen oracle values for the test suites (Airy function values,
derivatives, kernel integrals). Output is C++-pasteable text."""
import mpmath as mp

mp.mp.dps = 40

pts = [-15, -12.5, -10, -8, -7.5, -6, -5, -4.5, -3, -2, -1, -0.5,
       0, 0.5, 1, 2, 3, 4, 4.5, 5, 6, 6.5, 7, 8, 10, 12, 15, 20]

print("// {x, Ai(x), Ai'(x)}")
for x in pts:
    ai = mp.airyai(x)
    aip = mp.airyai(x, 1)
    print("    {%s, %s, %s}," % (mp.nstr(mp.mpf(x), 17), mp.nstr(ai, 20), mp.nstr(aip, 20)))

print()
print("// Ai^(n)(x) for n=2..8 at selected x")
for x in ['-3.3', '-1.1', '0.7', '2.2']:
    xv = mp.mpf(x)
    row = [mp.airyai(xv, n) for n in range(2, 9)]
    print("    // x = %s" % x)
    print("    {" + ", ".join(mp.nstr(v, 20) for v in row) + "},")

print()
print("// Airy kernel K(0,1) = int_0^inf Ai(z)Ai(1+z) dz")
k01 = mp.quad(lambda z: mp.airyai(z) * mp.airyai(1 + z), [0, mp.inf])
print("    %s" % mp.nstr(k01, 20))
closed = (mp.airyai(0) * mp.airyai(1, 1) - mp.airyai(0, 1) * mp.airyai(1)) / (0 - 1)
print("    closed form: %s" % mp.nstr(closed, 20))

print()
print("// extended entries")
# (2,1) magnitude at t=10, x=y=0: int_{-inf}^0 e^{10 z} Ai(z)^2 dz
v = mp.quad(lambda z: mp.exp(10 * z) * mp.airyai(z) ** 2, [-mp.inf, 0])
print("    I21(t=10,x=0,y=0) = %s" % mp.nstr(v, 20))
# (2,1) at t=0.3, x=-2, y=1
v = mp.quad(lambda z: mp.exp(mp.mpf('0.3') * z) * mp.airyai(-2 + z) * mp.airyai(1 + z), [-mp.inf, 0])
print("    I21(t=0.3,x=-2,y=1) = %s" % mp.nstr(v, 20))
# (1,2) at t=2, x=-1, y=0.5
v = mp.quad(lambda z: mp.exp(-2 * z) * mp.airyai(-1 + z) * mp.airyai(mp.mpf('0.5') + z), [0, mp.inf])
print("    I12(t=2,x=-1,y=0.5) = %s" % mp.nstr(v, 20))

print()
print("// full-line identity check: int e^{pz} Ai(x+z)Ai(y+z) dz, p=0.3, x=-2, y=1")
full = mp.quad(lambda z: mp.exp(mp.mpf('0.3') * z) * mp.airyai(-2 + z) * mp.airyai(1 + z), [-mp.inf, mp.inf])
p = mp.mpf('0.3'); xx = mp.mpf(-2); yy = mp.mpf(1)
formula = mp.exp(p**3/12 - p*(xx+yy)/2 - (xx-yy)**2/(4*p)) / (2*mp.sqrt(mp.pi*p))
print("    quad    = %s" % mp.nstr(full, 20))
print("    formula = %s" % mp.nstr(formula, 20))
