import numpy as np

# ---------- dense cascade synth (conventions to be mirrored in C++) ----------

def synth_orth(angles):
    p = np.array([1.0, 0.0]); q = np.array([0.0, 1.0])
    c, s = np.cos(angles[0]), np.sin(angles[0])
    p, q = c*p + s*q, -s*p + c*q
    for k in range(1, len(angles)):
        p = np.concatenate([p, [0.0, 0.0]])
        q = np.concatenate([[0.0, 0.0], q])
        c, s = np.cos(angles[k]), np.sin(angles[k])
        p, q = c*p + s*q, -s*p + c*q
    return p, -q

def eq1_relations(h0):
    N = len(h0)
    f0 = h0[::-1].copy()
    h1 = np.array([(-1)**n * h0[N-1-n] for n in range(N)])
    f1 = np.array([-(-1)**n * h0[n] for n in range(N)])
    return h1, f0, f1

rng = np.random.default_rng(7)
for K in range(0, 5):
    ang = rng.uniform(-np.pi, np.pi, K+1)
    h0, h1 = synth_orth(ang)
    h1e, f0, f1 = eq1_relations(h0)
    # cascade h1 vs Eq.1 h1
    print("K=%d  |h1_cascade-h1_eq1|=%.3e  ||h0||-1=%.3e" % (K, np.abs(h1-h1e).max(), abs(np.linalg.norm(h0)-1)))

# double-shift orthogonality
def dso(h0):
    N = len(h0); dev = abs(np.dot(h0,h0)-1)
    for k in range(1, N//2+1):
        dev = max(dev, abs(np.dot(h0[2*k:], h0[:N-2*k])))
    return dev

# ---------- factor_orth peeling ----------
def factor_orth(h0, tol=1e-10):
    assert len(h0) % 2 == 0
    if dso(h0) > tol: raise ValueError("not orthogonal")
    K = len(h0)//2 - 1
    h1, _, _ = eq1_relations(h0)
    g0 = h0.copy(); g1 = -h1.copy()   # undo diag(1,-1)
    angles = [0.0]*(K+1)
    for k in range(K, 0, -1):
        rb = np.hypot(g0[0], g1[0]); rt = np.hypot(g0[2*k+1], g1[2*k+1])
        if max(rb, rt) < tol: raise ValueError("factorization breakdown")
        if rb >= rt:
            th = np.arctan2(-g1[0], g0[0])
        else:
            th = np.arctan2(g0[2*k+1], g1[2*k+1])
        # fold to (-pi/2, pi/2]
        if th > np.pi/2: th -= np.pi
        elif th <= -np.pi/2: th += np.pi
        angles[k] = th
        c, s = np.cos(th), np.sin(th)
        a = c*g0 - s*g1          # should END with ~0,0
        b = s*g0 + c*g1          # should START with ~0,0
        g0 = a[:2*k]
        g1 = b[2:]
    th0 = np.arctan2(g0[1], g0[0])
    angles[0] = th0
    return np.array(angles)

print("\nfactor haar:", factor_orth(np.array([1,1])/np.sqrt(2)), "expected", np.pi/4)

ok = True
for trial in range(300):
    K = rng.integers(0, 5)
    ang = rng.uniform(-np.pi, np.pi, K+1)
    h0, _ = synth_orth(ang)
    a2 = factor_orth(h0)
    h0b, _ = synth_orth(a2)
    err = np.abs(h0-h0b).max()
    if err > 1e-10:
        ok = False
        print("roundtrip FAIL K=%d err=%.3e" % (K, err))
print("factor/synth roundtrip over 300 random draws:", "OK" if ok else "FAILED")

# DB tables (Strang orientation)
db2 = np.array([0.48296291314469025, 0.836516303737469, 0.22414386804185735, -0.12940952255092145])
db3 = np.array([0.3326705529509569, 0.8068915093133388, 0.4598775021193313,
                -0.13501102001039084, -0.08544127388224149, 0.035226291882100656])
db4 = np.array([0.23037781330885523, 0.7148465705525415, 0.6308807679295904, -0.02798376941698385,
                -0.18703481171888114, 0.030841381835986965, 0.032883011666982945, -0.010597401784997278])
for name, h in [("db2", db2), ("db3", db3), ("db4", db4)]:
    a = factor_orth(h, tol=1e-7)
    hr, _ = synth_orth(a)
    print(name, "dso=%.2e  angles=%s  resynth err=%.3e" % (dso(h), np.array2string(a, precision=8), np.abs(hr-h).max()))

# also reversed orientation (pywt dec_lo order)
for name, h in [("db2r", db2[::-1]), ("db3r", db3[::-1])]:
    a = factor_orth(h, tol=1e-7)
    hr, _ = synth_orth(a)
    print(name, "resynth err=%.3e" % np.abs(hr-h).max())

# ---------- biorth ----------
def synth_biorth(ks):
    p = np.array([1.0, 0.0]); q = np.array([0.0, 1.0])
    p, q = p + ks[0]*q, ks[0]*p + q
    for m in range(1, len(ks)):
        p = np.concatenate([p, [0.0, 0.0]])
        q = np.concatenate([[0.0, 0.0], q])
        p, q = p + ks[m]*q, ks[m]*p + q
    return p+q, p-q, p, q   # h0, h1, T, U

h0,h1,T,U = synth_biorth([0.0])
print("\nbiorth N=1 k=0:", h0, h1)
h0,h1,T,U = synth_biorth([0.0,0.0])
print("biorth N=2 k=0:", h0, h1)
ks = rng.uniform(-0.9,0.9,3)
h0,h1,T,U = synth_biorth(ks)
print("symm:", np.abs(h0-h0[::-1]).max(), "antisymm:", np.abs(h1+h1[::-1]).max(),
      "MIP:", np.abs(U-T[::-1]).max())

# ---------- transform roundtrip (circular, even-keep) ----------
def circ_filter(x, taps, delay):
    n = len(x); y = np.zeros(n)
    for i in range(n):
        acc = 0.0
        for t, c in enumerate(taps):
            acc += c * x[(i - delay - t) % n]
        y[i] = acc
    return y

def analyze(x, h0, d0, h1, d1):
    v0 = circ_filter(x, h0, d0); v1 = circ_filter(x, h1, d1)
    return v0[::2], v1[::2]

def synthesize(lo, hi, f0, df0, f1, df1, gain, delay):
    n = 2*len(lo)
    ul = np.zeros(n); uh = np.zeros(n)
    ul[::2] = lo; uh[::2] = hi
    w = circ_filter(ul, f0, df0) + circ_filter(uh, f1, df1)
    return np.roll(w, -delay) / gain
    # x_hat[i] = w[(i+delay)%n]/gain  == roll(w, -delay)/gain

def polyphase(h, d):
    # absolute tap positions d..d+len-1
    n = len(h)
    e0 = {}; e1 = {}
    for t, c in enumerate(h):
        j = d + t
        if j % 2 == 0: e0[j//2] = c
        else: e1[(j-1)//2] = c
    def tovec(dd):
        if not dd: return np.zeros(1), 0
        lo = min(dd); hi = max(dd)
        v = np.zeros(hi-lo+1)
        for k, c in dd.items(): v[k-lo] = c
        return v, lo
    return tovec(e0), tovec(e1)

def polymul(a, da, b, db):
    return np.convolve(a, b), da+db

def derive_synth(h0, d0, h1, d1):
    (e00, de00), (e01, de01) = polyphase(h0, d0)
    (e10, de10), (e11, de11) = polyphase(h1, d1)
    det, ddet = polymul(e00, de00, e11, de11)
    det2, ddet2 = polymul(e01, de01, e10, de10)
    # subtract aligned
    lo = min(ddet, ddet2); hi = max(ddet+len(det), ddet2+len(det2))
    D = np.zeros(hi-lo)
    D[ddet-lo:ddet-lo+len(det)] += det
    D[ddet2-lo:ddet2-lo+len(det2)] -= det2
    i = np.argmax(np.abs(D)); alpha = D[i]; md = lo + i
    rest = np.abs(np.delete(D, i)).max() if len(D) > 1 else 0.0
    assert rest < 1e-10*abs(alpha), (rest, alpha)
    # adj = [[e11, -e01], [-e10, e00]]
    # F0(z) = z^-1 R00(z^2) + R10(z^2);  F1 = z^-1 R01(z^2) + R11(z^2)
    def up2(v, dv, extra):  # poly in y -> poly in z^2, plus extra z delay
        out = np.zeros(2*len(v)-1+extra+1)
        for t, c in enumerate(v): out[2*t+extra] += c
        return out, 2*dv
    f0a, df0a = up2(e11, de11, 1)       # z^-1 * R00(z^2), R00=e11
    f0b, df0b = up2(-e10, de10, 0)      # R10 = -e10
    f1a, df1a = up2(-e01, de01, 1)
    f1b, df1b = up2(e00, de00, 0)
    def padd(a, da, b, db):
        lo = min(da, db); hi = max(da+len(a), db+len(b))
        v = np.zeros(hi-lo)
        v[da-lo:da-lo+len(a)] += a; v[db-lo:db-lo+len(b)] += b
        return v, lo
    f0, df0 = padd(f0a, df0a, f0b, df0b)
    f1, df1 = padd(f1a, df1a, f1b, df1b)
    return f0, df0, f1, df1, alpha, 2*md+1

# trim helper
def trim(v, d):
    nz = np.nonzero(np.abs(v) > 1e-14)[0]
    if len(nz) == 0: return np.array([0.0]), 0
    return v[nz[0]:nz[-1]+1], d+nz[0]

print("\n-- PR roundtrips --")
x = rng.standard_normal(64)
# orth via Eq.1 synthesis
for K in range(4):
    ang = rng.uniform(-np.pi, np.pi, K+1)
    h0, h1 = synth_orth(ang)
    _, f0, f1 = eq1_relations(h0)
    lo, hi = analyze(x, h0, 0, h1, 0)
    xr = synthesize(lo, hi, f0, 0, f1, 0, 1.0, len(h0)-1)
    print("orth K=%d PR err %.3e" % (K, np.abs(xr-x).max()))
# biorth via polyphase inversion
for N in range(1, 5):
    ks = rng.uniform(-0.9, 0.9, N)
    h0, h1, _, _ = synth_biorth(ks)
    f0, df0, f1, df1, gain, delay = derive_synth(h0, 0, h1, 0)
    expected_gain = -2*np.prod(1-ks**2)
    lo, hi = analyze(x, h0, 0, h1, 0)
    xr = synthesize(lo, hi, f0, df0, f1, df1, gain, delay)
    print("biorth N=%d PR err %.3e  gain %.6g (expect %.6g)  delay %d (expect %d)"
          % (N, np.abs(xr-x).max(), gain, expected_gain, delay, 2*N-1))

# lifting
s2 = 1/np.sqrt(2)
def synth_lifting(avec):
    h0 = np.array([s2, s2]); h1 = np.array([s2, -s2])
    for k, a in enumerate(avec, start=1):
        new = np.zeros(4*k+2)
        new[2:2+len(h1)] += h1
        new[0:2] += -a*h0[:2] if True else 0
        new[4*k:4*k+2] += a*h0[:2]
        h1 = new
    return h0, h1

def lifting_synthesis(avec):
    # R~(y) = E_B^{-1} G_1(y) ... G_N(y),  G_k = [[y^-1,0],[-P_k(y),1]]
    # represent 2x2 of (vec, delay)
    s = 1/np.sqrt(2)
    M = [[(np.array([s]),0), (np.array([s]),0)], [(np.array([s]),0), (np.array([-s]),0)]]
    def pm(a, b):
        v, d = polymul(a[0], a[1], b[0], b[1]); return trim(v, d)
    def pa(a, b):
        v, d = padd2(a, b); return trim(v, d)
    def padd2(a, b):
        (va, da), (vb, db) = a, b
        lo = min(da, db); hi = max(da+len(va), db+len(vb))
        v = np.zeros(hi-lo)
        v[da-lo:da-lo+len(va)] += va; v[db-lo:db-lo+len(vb)] += vb
        return v, lo
    for k, a in enumerate(avec, start=1):
        Pk = np.zeros(2*k+1); Pk[0] = -a; Pk[2*k] = a
        G = [[(np.array([1.0]),1), (np.array([0.0]),0)], [(-Pk, 0), (np.array([1.0]),0)]]
        M = [[pa(pm(M[i][0], G[0][j]), pm(M[i][1], G[1][j])) for j in range(2)] for i in range(2)]
    # F0(z) = z^-1 M00(z^2) + M10(z^2); F1 = z^-1 M01(z^2) + M11(z^2)
    def up2(vd, extra):
        v, d = vd
        out = np.zeros(2*len(v)-1+extra+1)
        for t, c in enumerate(v): out[2*t+extra] += c
        return out, 2*d
    f0, df0 = padd2(up2(M[0][0],1), up2(M[1][0],0))
    f1, df1 = padd2(up2(M[0][1],1), up2(M[1][1],0))
    f0, df0 = trim(f0, df0); f1, df1 = trim(f1, df1)
    return f0, df0, f1, df1

for N in [1, 2, 4, 8]:
    avec = rng.uniform(-2, 2, N)
    h0, h1 = synth_lifting(avec)
    f0, df0, f1, df1 = lifting_synthesis(avec)
    lo, hi = analyze(x, h0, 0, h1, 0)
    xr = synthesize(lo, hi, f0, df0, f1, df1, 1.0, 2*N+1)
    print("lifting N=%d PR err %.3e  len(h1)=%d" % (N, np.abs(xr-x).max(), len(h1)))

# stopband closed form sanity
h = np.array([s2, s2])
omega = np.linspace(np.pi/2, np.pi, 512)
H = np.array([np.sum(h*np.exp(-1j*w*np.arange(2))) for w in omega])
E = np.trapz(np.abs(H)**2, omega)
print("\nstopband Haar trapz=%.10f closed=%.10f diff=%.2e" % (E, np.pi/2-1, abs(E-(np.pi/2-1))))

# tune oracle: theta objective unimodal, min at pi/4
ths = np.linspace(0.01, np.pi/2-0.01, 2001)
vals = np.pi/2 - np.sin(2*ths)
print("grid argmin:", ths[np.argmin(vals)], "(pi/4 =", np.pi/4, ")")
