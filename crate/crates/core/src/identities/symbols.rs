use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::polyring::{LocalizedElement, LocalizedError, OrderKind, Polynomial, Ring};

/// Which model of the curve a computation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    /// `x^2 + c*y^2 - 1 - d*x^2*y^2` with free parameters `c`, `d`.
    Cd,
    /// `x^2 + y^2 - 1 - t^2*x^2*y^2`.
    T,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Form::Cd => "cd",
            Form::T => "t",
        }
    }
}

const POINT_VARS: [&str; 10] = ["x", "y", "x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"];

/// Variable sequence (and lex order) of the ring for a form. Coordinates
/// come first so that leading terms are governed by them; parameters last.
/// In the t-form ring `q` is the auxiliary variable used to encode
/// nonvanishing of coordinates.
pub fn variables(form: Form) -> Vec<&'static str> {
    let tail: &[&str] = match form {
        Form::Cd => &["c", "d", "p", "q"],
        Form::T => &["t", "q"],
    };
    POINT_VARS.iter().chain(tail).copied().collect()
}

pub fn ring(form: Form) -> Arc<Ring> {
    Ring::new(&variables(form), OrderKind::Lex)
}

/// Flip the sign of one term of a numerator of the base addition law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutation {
    /// 0 for the x numerator, 1 for the y numerator.
    pub coordinate: usize,
    /// Index of the term in canonical order.
    pub term: usize,
}

impl Mutation {
    /// All single-sign mutations of the two numerators (two terms each).
    pub fn all() -> Vec<Mutation> {
        (0..2)
            .flat_map(|coordinate| (0..2).map(move |term| Mutation { coordinate, term }))
            .collect()
    }
}

/// An affine point whose coordinates are fractions.
#[derive(Debug, Clone)]
pub struct SymPoint {
    pub x: LocalizedElement,
    pub y: LocalizedElement,
}

impl SymPoint {
    pub fn new(x: LocalizedElement, y: LocalizedElement) -> Self {
        SymPoint { x, y }
    }

    pub fn from_polys(x: Polynomial, y: Polynomial) -> Self {
        SymPoint::new(LocalizedElement::from_poly(x), LocalizedElement::from_poly(y))
    }

    /// `(x_i, y_i)`.
    pub fn generic(ring: &Arc<Ring>, i: usize) -> Self {
        SymPoint::from_polys(
            Polynomial::var(ring, &format!("x{i}")),
            Polynomial::var(ring, &format!("y{i}")),
        )
    }

    pub fn constant(ring: &Arc<Ring>, x: i64, y: i64) -> Self {
        SymPoint::from_polys(Polynomial::constant(ring, x), Polynomial::constant(ring, y))
    }

    /// `(x, -y)`.
    pub fn iota(&self) -> Self {
        SymPoint::new(self.x.clone(), -&self.y)
    }

    /// `(-y, x)`.
    pub fn rho(&self) -> Self {
        SymPoint::new(-&self.y, self.x.clone())
    }

    pub fn rho_pow(&self, k: usize) -> Self {
        (0..k % 4).fold(self.clone(), |p, _| p.rho())
    }

    /// `(1/(t*x), 1/(t*y))`.
    pub fn tau(&self, t: &Polynomial) -> Result<Self, LocalizedError> {
        let t = LocalizedElement::from_poly(t.clone());
        Ok(SymPoint::new(
            (&t * &self.x).invert("t*x")?,
            (&t * &self.y).invert("t*y")?,
        ))
    }

    /// Coordinatewise equality as fractions.
    pub fn equals(&self, other: &SymPoint) -> bool {
        self.x.equals(&other.x) && self.y.equals(&other.y)
    }

    /// Value of a polynomial in `x, y` at this point.
    pub fn eval(&self, p: &Polynomial) -> LocalizedElement {
        LocalizedElement::eval_polynomial(p, &[("x", &self.x), ("y", &self.y)])
    }
}

/// A rational addition law `(nx/dx, ny/dy)` written in `x1, y1, x2, y2`.
#[derive(Debug, Clone, PartialEq)]
pub struct AddLaw {
    pub index: u8,
    pub nx: Polynomial,
    pub dx: Polynomial,
    pub ny: Polynomial,
    pub dy: Polynomial,
}

impl AddLaw {
    /// `dx * dy`, the product whose nonvanishing makes the law defined.
    pub fn delta(&self) -> Polynomial {
        &self.dx * &self.dy
    }

    fn at(p: &Polynomial, a: &SymPoint, b: &SymPoint) -> LocalizedElement {
        LocalizedElement::eval_polynomial(
            p,
            &[("x1", &a.x), ("y1", &a.y), ("x2", &b.x), ("y2", &b.y)],
        )
    }

    /// `a (+) b` as fractions. Fails if a denominator is identically zero.
    pub fn apply(&self, a: &SymPoint, b: &SymPoint) -> Result<SymPoint, LocalizedError> {
        let i = self.index;
        Ok(SymPoint::new(
            Self::at(&self.nx, a, b).div(&Self::at(&self.dx, a, b), &format!("d{i}x"))?,
            Self::at(&self.ny, a, b).div(&Self::at(&self.dy, a, b), &format!("d{i}y"))?,
        ))
    }

    /// `(dx(a, b), dy(a, b))` as fractions.
    pub fn denominators_at(&self, a: &SymPoint, b: &SymPoint) -> (LocalizedElement, LocalizedElement) {
        (Self::at(&self.dx, a, b), Self::at(&self.dy, a, b))
    }

    /// Swaps the subscripts 1 and 2 in every component.
    pub fn swapped(&self) -> AddLaw {
        let ring = self.nx.ring().clone();
        let v = |n: &str| Polynomial::var(&ring, n);
        let (x1, y1, x2, y2) = (v("x1"), v("y1"), v("x2"), v("y2"));
        let map = [("x1", &x2), ("y1", &y2), ("x2", &x1), ("y2", &y1)];
        let s = |p: &Polynomial| p.substitute(&ring, &map);
        AddLaw {
            index: self.index,
            nx: s(&self.nx),
            dx: s(&self.dx),
            ny: s(&self.ny),
            dy: s(&self.dy),
        }
    }
}

/// The named polynomials of one curve model.
#[derive(Debug, Clone)]
pub struct SymbolTable {
    pub form: Form,
    pub ring: Arc<Ring>,
    /// Curve polynomial in `x, y`.
    pub e: Polynomial,
    /// `1 - d*x1*x2*y1*y2`.
    pub delta_minus: Polynomial,
    /// `1 + d*x1*x2*y1*y2`.
    pub delta_plus: Polynomial,
    /// `delta_minus * delta_plus`.
    pub delta: Polynomial,
    /// Base law: numerators `nu0x`, `nu0y` over `delta_minus`, `delta_plus`.
    pub law0: AddLaw,
    /// Conjugated law `(x1*y1 - x2*y2)/(x2*y1 - x1*y2), (x1*y1 + x2*y2)/(x1*x2 + y1*y2)`.
    pub law1: AddLaw,
    /// Denominator-free products for the two association orders.
    pub big_delta_x: Polynomial,
    pub big_delta_y: Polynomial,
    /// `(x1 + 1)*y2 - (x2 + 1)*y1`.
    pub det: Polynomial,
    /// `x*y + p*(x + 1) + q*y`; only in the cd form.
    pub h: Option<Polynomial>,
    pub mutation: Option<Mutation>,
}

impl SymbolTable {
    pub fn var(&self, name: &str) -> Polynomial {
        Polynomial::var(&self.ring, name)
    }

    pub fn parse(&self, src: &str) -> Polynomial {
        Polynomial::parse(&self.ring, src).expect("built-in polynomial text")
    }

    /// `e(x_i, y_i)`.
    pub fn e_at(&self, i: usize) -> Polynomial {
        let (x, y) = (self.var(&format!("x{i}")), self.var(&format!("y{i}")));
        self.e.substitute(&self.ring, &[("x", &x), ("y", &y)])
    }

    /// `t` in the t form, `None` in the cd form.
    pub fn t(&self) -> Option<Polynomial> {
        (self.form == Form::T).then(|| self.var("t"))
    }

    pub fn law(&self, i: u8) -> &AddLaw {
        match i {
            0 => &self.law0,
            _ => &self.law1,
        }
    }

    pub fn point(&self, i: usize) -> SymPoint {
        SymPoint::generic(&self.ring, i)
    }

    /// The same table with one sign of the base-law numerators flipped.
    pub fn mutated(&self, m: Mutation) -> SymbolTable {
        let mut out = self.clone();
        let target = if m.coordinate == 0 { &mut out.law0.nx } else { &mut out.law0.ny };
        let mut terms = target.terms().to_vec();
        assert!(m.term < terms.len(), "no term {} to mutate", m.term);
        terms[m.term].1 = -terms[m.term].1.clone();
        *target = Polynomial::from_terms(&self.ring, terms);
        out.mutation = Some(m);
        out
    }
}

/// Builds every named polynomial of a curve model.
pub fn build_symbols(form: Form) -> SymbolTable {
    let ring = ring(form);
    let p = |s: &str| Polynomial::parse(&ring, s).expect("built-in polynomial text");
    let (e, d) = match form {
        Form::Cd => (p("x^2 + c*y^2 - 1 - d*x^2*y^2"), p("d")),
        Form::T => (p("x^2 + y^2 - 1 - t^2*x^2*y^2"), p("t^2")),
    };
    let u = &d * &p("x1*x2*y1*y2");
    let one = Polynomial::one(&ring);
    let delta_minus = &one - &u;
    let delta_plus = &one + &u;
    let delta = &delta_minus * &delta_plus;
    let nu0x = match form {
        Form::Cd => p("x1*x2 - c*y1*y2"),
        Form::T => p("x1*x2 - y1*y2"),
    };
    let law0 = AddLaw {
        index: 0,
        nx: nu0x,
        dx: delta_minus.clone(),
        ny: p("x1*y2 + y1*x2"),
        dy: delta_plus.clone(),
    };
    let law1 = AddLaw {
        index: 1,
        nx: p("x1*y1 - x2*y2"),
        dx: p("x2*y1 - x1*y2"),
        ny: p("x1*y1 + x2*y2"),
        dy: p("x1*x2 + y1*y2"),
    };
    let (big_delta_x, big_delta_y) = big_deltas(&ring, &law0);
    let h = (form == Form::Cd).then(|| p("x*y + p*(x + 1) + q*y"));
    SymbolTable {
        form,
        ring: ring.clone(),
        e,
        delta_minus,
        delta_plus,
        delta,
        law0,
        law1,
        big_delta_x,
        big_delta_y,
        det: p("(x1 + 1)*y2 - (x2 + 1)*y1"),
        h,
        mutation: None,
    }
}

/// `dx(z1 (+) z2, z3) * dx(z1, z2 (+) z3) * delta12 * delta23` and its `y`
/// analogue, with the inner fractions cleared.
fn big_deltas(ring: &Arc<Ring>, law: &AddLaw) -> (Polynomial, Polynomial) {
    let z: Vec<SymPoint> = (1..=3).map(|i| SymPoint::generic(ring, i)).collect();
    let s12 = law.apply(&z[0], &z[1]).expect("generic sum");
    let s23 = law.apply(&z[1], &z[2]).expect("generic sum");
    let pair = |a: &SymPoint, b: &SymPoint| {
        let m = [("x1", &a.x), ("y1", &a.y), ("x2", &b.x), ("y2", &b.y)];
        (
            LocalizedElement::eval_polynomial(&law.dx, &m),
            LocalizedElement::eval_polynomial(&law.dy, &m),
        )
    };
    let sub = |p: &Polynomial, a: usize, b: usize| {
        let v = |n: String| Polynomial::var(ring, &n);
        let (xa, ya, xb, yb) = (v(format!("x{a}")), v(format!("y{a}")), v(format!("x{b}")), v(format!("y{b}")));
        LocalizedElement::from_poly(p.substitute(ring, &[("x1", &xa), ("y1", &ya), ("x2", &xb), ("y2", &yb)]))
    };
    let clear = &sub(&law.delta(), 1, 2) * &sub(&law.delta(), 2, 3);
    let (ox, oy) = pair(&s12, &z[2]);
    let (ix, iy) = pair(&z[0], &s23);
    let bx = &(&ox * &ix) * &clear;
    let by = &(&oy * &iy) * &clear;
    (
        bx.try_into_polynomial().expect("cleared product is a polynomial"),
        by.try_into_polynomial().expect("cleared product is a polynomial"),
    )
}
