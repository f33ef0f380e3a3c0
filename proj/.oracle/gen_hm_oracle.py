#!/usr/bin/env python3
"""High-precision Hastings-McLeod reference values via mpmath Taylor ODE
integration from deep in the right asymptotic regime (q ~ Ai there)."""
import mpmath as mp
import time

mp.mp.dps = 40

S0 = mp.mpf(12)   # start; q(12)=Ai(12) exact to ~1e-36 relative
t0 = time.time()

# integrate leftward: tau = S0 - s, y = [q, q'], d/dtau = -d/ds
f = mp.odefun(lambda tau, y: [-y[1], -((S0 - tau) * y[0] + 2 * y[0] ** 3)],
              0, [mp.airyai(S0), mp.airyai(S0, 1)], tol=mp.mpf(10) ** (-36))

targets = [8, 6, 5, 4, 2, 1, 0, -1, -2, -4, -6, -8, -10]
print("// {s, q(s), q'(s)}  (leftward Taylor integration, dps=40)")
for s in targets:
    tau = S0 - mp.mpf(s)
    y = f(tau)
    print("    {%s, %s, %s}," % (s, mp.nstr(y[0], 24), mp.nstr(y[1], 24)), flush=True)
    print("    // elapsed %.1fs" % (time.time() - t0), flush=True)

# u00(s) = int_s^inf q^2 and I1(s) = int_s^inf u00 (=> F2 = exp(-I1))
mp.mp.dps = 30
def q2(s):
    return f(S0 - s) ** 2

print("// {s, u00(s), F2(s)}")
for s in [-6, -4, -2, mp.mpf('-1.7'), 0, 2, 4]:
    sv = mp.mpf(s)
    u00 = mp.quad(q2, [sv, 0, 6, S0]) + mp.quad(lambda x: mp.airyai(x) ** 2, [S0, mp.inf])
    # I1 = int_s^inf (x - s) q(x)^2 dx
    I1 = mp.quad(lambda x: (x - sv) * q2(x), [sv, 0, 6, S0]) + \
         mp.quad(lambda x: (x - sv) * mp.airyai(x) ** 2, [S0, mp.inf])
    F2 = mp.exp(-I1)
    print("    {%s, %s, %s}," % (mp.nstr(sv, 10), mp.nstr(u00, 22), mp.nstr(F2, 22)), flush=True)
    print("    // elapsed %.1fs" % (time.time() - t0), flush=True)
