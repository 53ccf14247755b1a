use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::ReduceError;
use crate::field::{FieldElement, PrimeField};
use crate::polyring::{MonomialOrder, Polynomial, Ring};

/// Output of multivariate division, checkable without rerunning it:
///
/// `multiplier * dividend = sum(quotients[i] * divisors[i]) + remainder`.
///
/// `multiplier` is 1 unless some divisor had a non-unit leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionCertificate {
    pub dividend: Polynomial,
    pub divisors: Vec<Polynomial>,
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub multiplier: BigInt,
    pub order: MonomialOrder,
}

/// JSON document for a certificate; polynomials use the canonical text form.
#[derive(Debug, Serialize, Deserialize)]
struct CertificateDoc {
    dividend: String,
    divisors: Vec<String>,
    quotients: Vec<String>,
    remainder: String,
    #[serde(default = "one_string")]
    multiplier: String,
    order: MonomialOrder,
}

fn one_string() -> String {
    "1".into()
}

/// Random-evaluation trials used by [`ReductionCertificate::verify`].
pub const DEFAULT_AUDIT_TRIALS: usize = 100;

impl ReductionCertificate {
    /// The certificate `p = p` with no divisors. Its remainder is zero exactly
    /// when `p` is; used for identities checked by plain expansion.
    pub fn unreduced(p: &Polynomial, order: &MonomialOrder) -> Self {
        let ring = super::division::ring_for(order, p.ring());
        let p = p.to_ring(&ring);
        ReductionCertificate {
            dividend: p.clone(),
            divisors: Vec::new(),
            quotients: Vec::new(),
            remainder: p,
            multiplier: BigInt::one(),
            order: order.clone(),
        }
    }

    pub fn is_zero_remainder(&self) -> bool {
        self.remainder.is_zero()
    }

    /// No remainder monomial is divisible by a divisor's leading monomial.
    pub fn remainder_is_reduced(&self) -> bool {
        let leads: Vec<_> = self
            .divisors
            .iter()
            .filter_map(|g| g.leading_monomial())
            .collect();
        self.remainder
            .terms()
            .iter()
            .all(|(m, _)| !leads.iter().any(|l| l.divides(m)))
    }

    fn well_formed(&self) -> bool {
        self.divisors.len() == self.quotients.len() && self.multiplier.sign() == num_bigint::Sign::Plus
    }

    /// `multiplier * dividend - sum(q_i * g_i) - remainder`, expanded.
    pub fn defect(&self) -> Polynomial {
        let mut acc = &self.dividend.scale(&self.multiplier) - &self.remainder;
        for (q, g) in self.quotients.iter().zip(&self.divisors) {
            acc = &acc - &(q * g);
        }
        acc
    }

    /// The identity checked by exact polynomial arithmetic.
    pub fn check_exact(&self) -> bool {
        self.well_formed() && self.defect().is_zero()
    }

    /// The identity checked at `trials` uniformly random points of the audit
    /// field. Independent of the exact check.
    pub fn check_random(&self, trials: usize, seed: u64) -> bool {
        if !self.well_formed() {
            return false;
        }
        let field = PrimeField::audit();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nvars = self.dividend.ring().nvars();
        let m = field.from_bigint(&self.multiplier);
        (0..trials).all(|_| {
            let point: Vec<FieldElement> = (0..nvars)
                .map(|_| field.from_u64(rng.gen_range(0..field.modulus())))
                .collect();
            let lhs = m * self.dividend.eval_at(&point);
            let rhs = self
                .quotients
                .iter()
                .zip(&self.divisors)
                .fold(self.remainder.eval_at(&point), |acc, (q, g)| {
                    acc + q.eval_at(&point) * g.eval_at(&point)
                });
            lhs == rhs
        })
    }

    /// Exact check plus [`DEFAULT_AUDIT_TRIALS`] random evaluations.
    pub fn verify(&self) -> bool {
        self.check_exact() && self.check_random(DEFAULT_AUDIT_TRIALS, 0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = CertificateDoc {
            dividend: self.dividend.to_string(),
            divisors: self.divisors.iter().map(|p| p.to_string()).collect(),
            quotients: self.quotients.iter().map(|p| p.to_string()).collect(),
            remainder: self.remainder.to_string(),
            multiplier: self.multiplier.to_string(),
            order: self.order.clone(),
        };
        serde_json::to_value(doc).expect("certificate serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ReduceError> {
        let doc: CertificateDoc = serde_json::from_str(text)?;
        let ring = Ring::from_order(doc.order.clone());
        let parse = |s: &str| Polynomial::parse(&ring, s);
        let multiplier: BigInt = doc
            .multiplier
            .parse()
            .map_err(|_| ReduceError::BadMultiplier(doc.multiplier.clone()))?;
        Ok(ReductionCertificate {
            dividend: parse(&doc.dividend)?,
            divisors: doc.divisors.iter().map(|s| parse(s)).collect::<Result<_, _>>()?,
            quotients: doc.quotients.iter().map(|s| parse(s)).collect::<Result<_, _>>()?,
            remainder: parse(&doc.remainder)?,
            multiplier,
            order: doc.order,
        })
    }

    /// SHA-256 of the compact JSON form, hex encoded.
    pub fn digest(&self) -> String {
        let text = serde_json::to_string(&self.to_json_value()).expect("certificate serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    pub fn is_unit_multiplier(&self) -> bool {
        self.multiplier.is_one()
    }
}

/// Exact and random-evaluation check of a certificate.
pub fn verify_certificate(cert: &ReductionCertificate) -> bool {
    cert.verify()
}
