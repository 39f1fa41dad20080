"""Small-k power series of the non-inflectional V-root function.

Writes src/f2v_series.rs: f2v(u, k) / k^8 as a polynomial in m = k^2 whose
coefficients are finite sums of u^a sin(u)^b cos(u)^c with exact rational
coefficients. sn, cn, dn and E(am u) are expanded in m around the circular
case by inverting the incomplete first-kind integral term by term.

Usage: python3 tools/f2v_series.py [ORDER] > src/f2v_series.rs
"""

from fractions import Fraction as Fr
import sys

ORDER = int(sys.argv[1]) if len(sys.argv) > 1 else 13
# f2v = O(k^8) = O(m^4), so terms up to m^(4 + ORDER) are needed.
N = 4 + ORDER

# A polynomial is a dict {(a, b, c): coeff} for coeff * u^a sin^b cos^c,
# reduced so that b <= 1. A series is a list of polynomials indexed by the
# power of m.


def norm(p):
    out={}
    stack=list(p.items())
    while stack:
        (a,b,c),v=stack.pop()
        if v==0: continue
        if b>=2:
            stack.append(((a,b-2,c),v)); stack.append(((a,b-2,c+2),-v))
        else:
            out[(a,b,c)]=out.get((a,b,c),0)+v
    return {k_:v for k_,v in out.items() if v!=0}
def add(p,q,s=1):
    r=dict(p)
    for k_,v in q.items(): r[k_]=r.get(k_,0)+s*v
    return {k_:v for k_,v in r.items() if v!=0}
def mul(p,q):
    r={}
    for (a,b,c),v in p.items():
        for (a2,b2,c2),v2 in q.items():
            k_=(a+a2,b+b2,c+c2); r[k_]=r.get(k_,0)+v*v2
    return norm(r)
def scal(p,s): return {k_:v*s for k_,v in p.items() if v*s!=0}
def der(p):
    r={}
    for (a,b,c),v in p.items():
        if a: r[(a-1,b,c)]=r.get((a-1,b,c),0)+a*v
        if b: r[(a,b-1,c+1)]=r.get((a,b-1,c+1),0)+b*v
        if c: r[(a,b+1,c-1)]=r.get((a,b+1,c-1),0)-c*v
    return norm(r)
ONE={(0,0,0):Fr(1)}; U={(1,0,0):Fr(1)}; S={(0,1,0):Fr(1)}; C={(0,0,1):Fr(1)}
def sadd(A,B,s=1): return [add(a,b,s) for a,b in zip(A,B)]
def smul(A,B):
    R=[{} for _ in range(N+1)]
    for i,a in enumerate(A):
        if not a: continue
        for j,b in enumerate(B):
            if i+j>N: break
            if not b: continue
            R[i+j]=add(R[i+j],mul(a,b))
    return R
def sconst(p): return [p]+[{} for _ in range(N)]
def sscal(A,s): return [scal(a,s) for a in A]
def spow(A,n):
    R=sconst(ONE)
    for _ in range(n): R=smul(R,A)
    return R
M=[{} ,ONE]+[{} for _ in range(N-1)]
Icache={0:U, 1:add(ONE,C,-1)}
def I(n):
    if n in Icache: return Icache[n]
    sp_=ONE
    for _ in range(n-1): sp_=mul(sp_,S)
    t=scal(mul(sp_,C),Fr(-1,n))
    r=add(t,scal(I(n-2),Fr(n-1,n)))
    Icache[n]=r; return r
def compose(f, D):
    R=sconst(f); d=f; Dn=sconst(ONE); fact=1
    for n in range(1,N+1):
        d=der(d); fact*=n; Dn=smul(Dn,D)
        R=sadd(R,sscal(smul(sconst(d),Dn),Fr(1,fact)))
    return R
def binom(a,j):
    r=Fr(1)
    for i in range(j): r=r*(a-i)/(i+1)
    return r
delta=[{} for _ in range(N+1)]
for j in range(1,N+1):
    tot=[{} for _ in range(N+1)]
    for i in range(1,j+1):
        a=binom(Fr(-1,2),i)*(-1)**i
        comp=compose(I(2*i),delta)
        comp=smul(comp,spow(M,i))
        tot=sadd(tot,sscal(comp,a))
    delta[j]=scal(tot[j],-1)
sn=compose(S,delta); cn=compose(C,delta)
sn2=smul(sn,sn)
dn=sconst(ONE)
msn2=smul(M,sn2)
for j in range(1,N+1):
    dn=sadd(dn,sscal(spow(msn2,j),binom(Fr(1,2),j)*(-1)**j))
E=[{} for _ in range(N+1)]
for i in range(0,N+1):
    a=binom(Fr(1,2),i)*(-1)**i
    E=sadd(E,sscal(smul(compose(I(2*i),delta),spow(M,i)),a))
Us=sconst(U)
g2=sadd(sscal(E,2), smul(sadd(sconst(scal(ONE,2)),M,-1),Us),-1)
k2=M
t1=smul(dn, sadd(sscal(smul(k2,smul(smul(cn,cn),sn2)),8), smul(smul(g2,g2), sadd(sconst(scal(ONE,3)),sscal(sn2,6),-1))))
inner=sadd(sadd(smul(smul(g2,g2),g2), smul(smul(M,M),Us),-1), sscal(smul(g2, sadd(sconst(scal(ONE,4)), smul(k2, sadd(sconst(ONE),sscal(sn2,6),-1)))),2),-1)
f=sscal(sadd(t1, smul(smul(cn,sn),inner)),Fr(4,3))


def emit(f):
    rows = []
    for j in range(ORDER + 1):
        for (a, b, c), v in sorted(f[j + 4].items()):
            rows.append(f"    ({j}, {a}, {b}, {c}, {float(v)!r}),")
    print("// Generated by exact rational power-series expansion in m = k^2 of the")
    print("// non-inflectional V-root function. Each row is (j, a, b, c, coeff) for the term")
    print("// coeff * m^j * u^a * sin(u)^b * cos(u)^c of f2v(u, k) / k^8.")
    print()
    print(f"pub(crate) const F2V_SMALL_K_TERMS: [(u8, u8, u8, u8, f64); {len(rows)}] = [")
    print("\n".join(rows))
    print("];")
    print()
    print(f"pub(crate) const F2V_SMALL_K_ORDER: usize = {ORDER};")


emit(f)
