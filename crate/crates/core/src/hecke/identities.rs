//! Exact checks of the commutation identities between loop powers and
//! crossings. Write `X = t_n`, `Y = t_{n+1}` and `g = g_{n+1}`.

use super::{normal_form, AlgebraElement};
use crate::braid::{expand_loop, Gen, MixedBraidWord};
use crate::coeff::LaurentPoly;
use crate::error::{Result, SkeinError};
use crate::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `t_n^k g_n = ±(q-1) Σ_j q^j t_{n-1}^j t_n^{k-j} + q^k g_n t_{n-1}^k`,
    /// summing `j = 0..k-1` with sign `+` for `k > 0` and `j = k..-1` with
    /// sign `-` for `k < 0`.
    Eq5,
    /// For `k ≥ 1`: `X^k g = q^{1-k} g⁻¹ Y^k + (q⁻¹-1) Σ_{j=0}^{k-2} q^{-j} X^{k-j-1} Y^{j+1}`.
    Lemma2i,
    /// For `k ≤ -1`: `X^k g = q^k g⁻¹ Y^k + (q⁻¹-1) Σ_{j=1}^{-k} q^{k+j} X^{-j} Y^{k+j}`.
    /// Fails for every `k ≤ -1`; kept as a negative control.
    Lemma2iiPrinted,
    /// For `k ≤ -1`: `X^k g = q^{1-k} g⁻¹ Y^k + (q-1) Σ_{j=0}^{-k} q^{-k-j} X^{-j} Y^{k+j}`.
    Lemma2iiDerived,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::Eq5,
        Identity::Lemma2i,
        Identity::Lemma2iiPrinted,
        Identity::Lemma2iiDerived,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Eq5 => "eq5",
            Identity::Lemma2i => "lemma2i",
            Identity::Lemma2iiPrinted => "lemma2ii-printed",
            Identity::Lemma2iiDerived => "lemma2ii",
        }
    }

    pub fn from_name(s: &str) -> Option<Identity> {
        Self::ALL.into_iter().find(|i| i.name() == s)
    }
}

/// Result of checking one instance of an identity.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub n: usize,
    pub k: i64,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
    /// `lhs - rhs`; zero exactly when the identity holds.
    pub difference: AlgebraElement,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

struct Builder {
    strands: usize,
    acc: AlgebraElement,
}

impl Builder {
    fn new(strands: usize) -> Self {
        Builder {
            strands,
            acc: AlgebraElement::zero(strands, Variant::T),
        }
    }

    fn word(&self, parts: &[Part]) -> MixedBraidWord {
        let mut w = MixedBraidWord::identity(self.strands);
        for p in parts {
            w = match *p {
                Part::Loop(i, k) => w.concat(&expand_loop(i, Variant::T, k, self.strands).expect("index in range")),
                Part::G(i, e) => {
                    let mut v = w;
                    v.push(Gen::Sigma(i), e).expect("index in range");
                    v
                }
            };
        }
        w
    }

    fn add(&mut self, c: LaurentPoly, parts: &[Part]) {
        let e = normal_form(&self.word(parts), Variant::T).scale(&c);
        self.acc = self.acc.add(&e).expect("same shape");
    }
}

#[derive(Clone, Copy)]
enum Part {
    Loop(usize, i64),
    G(usize, i64),
}

fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e as i32)
}

fn qm1(e: i64) -> LaurentPoly {
    &qp(e) - &LaurentPoly::one()
}

/// Checks one instance exactly in `H_{1,n+2}(q)`, or in `H_{1,n+1}(q)` for
/// [`Identity::Eq5`].
pub fn verify_identity(identity: Identity, n: usize, k: i64) -> Result<IdentityCheck> {
    if k == 0 {
        return Err(SkeinError::Invalid("k must be nonzero".into()));
    }
    let (strands, lhs_parts) = match identity {
        Identity::Eq5 => {
            if n == 0 {
                return Err(SkeinError::Invalid("this identity needs n >= 1".into()));
            }
            (n + 1, vec![Part::Loop(n, k), Part::G(n, 1)])
        }
        _ => (n + 2, vec![Part::Loop(n, k), Part::G(n + 1, 1)]),
    };
    match identity {
        Identity::Lemma2i if k < 1 => return Err(SkeinError::Invalid("this identity needs k >= 1".into())),
        Identity::Lemma2iiPrinted | Identity::Lemma2iiDerived if k > -1 => {
            return Err(SkeinError::Invalid("this identity needs k <= -1".into()))
        }
        _ => {}
    }
    let mut lhs = Builder::new(strands);
    lhs.add(LaurentPoly::one(), &lhs_parts);
    let mut rhs = Builder::new(strands);
    let x = n;
    let y = n + 1;
    let g = n + 1;
    match identity {
        Identity::Eq5 => {
            let (x, y, g) = (n - 1, n, n);
            let (range, sign) = if k > 0 { (0..k, 1) } else { (k..0, -1) };
            for j in range {
                rhs.add(
                    (&qm1(1) * &LaurentPoly::from_int(sign)).shift(j as i32, 0),
                    &[Part::Loop(x, j), Part::Loop(y, k - j)],
                );
            }
            rhs.add(qp(k), &[Part::G(g, 1), Part::Loop(x, k)]);
        }
        Identity::Lemma2i => {
            rhs.add(qp(1 - k), &[Part::G(g, -1), Part::Loop(y, k)]);
            for j in 0..=k - 2 {
                rhs.add(&qm1(-1) * &qp(-j), &[Part::Loop(x, k - j - 1), Part::Loop(y, j + 1)]);
            }
        }
        Identity::Lemma2iiPrinted => {
            rhs.add(qp(k), &[Part::G(g, -1), Part::Loop(y, k)]);
            for j in 1..=-k {
                rhs.add(&qm1(-1) * &qp(k + j), &[Part::Loop(x, -j), Part::Loop(y, k + j)]);
            }
        }
        Identity::Lemma2iiDerived => {
            rhs.add(qp(1 - k), &[Part::G(g, -1), Part::Loop(y, k)]);
            for j in 0..=-k {
                rhs.add(&qm1(1) * &qp(-k - j), &[Part::Loop(x, -j), Part::Loop(y, k + j)]);
            }
        }
    }
    let difference = lhs.acc.sub(&rhs.acc).expect("same shape");
    Ok(IdentityCheck {
        identity,
        n,
        k,
        lhs: lhs.acc,
        rhs: rhs.acc,
        difference,
    })
}
