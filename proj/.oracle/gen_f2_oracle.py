#!/usr/bin/env python3
"""u00 and F2 reference values from the high-precision HM solution."""
import mpmath as mp
import time

mp.mp.dps = 30
S0 = mp.mpf(12)
t0 = time.time()

f = mp.odefun(lambda tau, y: [-y[1], -((S0 - tau) * y[0] + 2 * y[0] ** 3)],
              0, [mp.airyai(S0), mp.airyai(S0, 1)], tol=mp.mpf(10) ** (-28))

def q(s):
    return f(S0 - s)[0]

print("// {s, u00(s), F2(s)}")
for s in [-6, -4, -2, mp.mpf('-1.7'), 0, 2, 4]:
    sv = mp.mpf(s)
    u00 = mp.quad(lambda x: q(x) ** 2, [sv, 0, 6, S0]) + \
          mp.quad(lambda x: mp.airyai(x) ** 2, [S0, mp.inf])
    I1 = mp.quad(lambda x: (x - sv) * q(x) ** 2, [sv, 0, 6, S0]) + \
         mp.quad(lambda x: (x - sv) * mp.airyai(x) ** 2, [S0, mp.inf])
    F2 = mp.exp(-I1)
    print("    {%s, %s, %s}," % (mp.nstr(sv, 10), mp.nstr(u00, 22), mp.nstr(F2, 22)), flush=True)
    print("    // elapsed %.1fs" % (time.time() - t0), flush=True)
