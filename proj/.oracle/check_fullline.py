#!/usr/bin/env python3
"""Check the full-line integral identity with segmented quadrature."""
import mpmath as mp

mp.mp.dps = 30

def fullline(p, x, y, zmin=-250):
    # right part: [0, 60] (Ai decay kills it)
    right = mp.quad(lambda z: mp.exp(p*z)*mp.airyai(x+z)*mp.airyai(y+z), [0, 10, 30, 60])
    # left part: unit segments, oscillatory but damped by e^{pz}
    left = mp.mpf(0)
    z0 = mp.mpf(0)
    while z0 > zmin:
        seg = mp.quad(lambda z: mp.exp(p*z)*mp.airyai(x+z)*mp.airyai(y+z), [z0-1, z0])
        left += seg
        z0 -= 1
    return left + right

def formula(p, x, y):
    return mp.exp(p**3/12 - p*(x+y)/2 - (x-y)**2/(4*p)) / (2*mp.sqrt(mp.pi*p))

for (p, x, y) in [(mp.mpf('0.3'), mp.mpf(-2), mp.mpf(1)),
                  (mp.mpf('1'), mp.mpf(0), mp.mpf(0)),
                  (mp.mpf('0.5'), mp.mpf(-1), mp.mpf('0.5'))]:
    zmin = -float(60/p)
    num = fullline(p, x, y, zmin)
    ana = formula(p, x, y)
    print("p=%s x=%s y=%s  quad=%s  formula=%s  diff=%s" %
          (p, x, y, mp.nstr(num, 18), mp.nstr(ana, 18), mp.nstr(num-ana, 5)))

# also recompute I21 at t=0.3 x=-2 y=1 by segments for a trusted frozen value
p = mp.mpf('0.3'); x = mp.mpf(-2); y = mp.mpf(1)
left = mp.mpf(0); z0 = mp.mpf(0)
while z0 > -220:
    left += mp.quad(lambda z: mp.exp(p*z)*mp.airyai(x+z)*mp.airyai(y+z), [z0-1, z0])
    z0 -= 1
print("I21(t=0.3,x=-2,y=1) segmented = %s" % mp.nstr(left, 20))

# and I21 at t=10 x=y=0 by segments
p = mp.mpf(10); x = mp.mpf(0); y = mp.mpf(0)
left = mp.mpf(0); z0 = mp.mpf(0)
while z0 > -10:
    left += mp.quad(lambda z: mp.exp(p*z)*mp.airyai(x+z)*mp.airyai(y+z), [z0-mp.mpf('0.25'), z0])
    z0 -= mp.mpf('0.25')
print("I21(t=10,x=0,y=0) segmented = %s" % mp.nstr(left, 20))
