//! `w2`, discriminants and Serre's invariant `w2(q_E) + (-2, d_E)`, with
//! translations into the formal calculus and concrete Brauer classes.

use crate::arith::linalg::{det, Matrix};
use crate::arith::rational::squarefree_kernel;
use crate::arith::tower::TowerFunc;
use crate::arith::{Field, NfElem, Rational, SquareConfig, SquareOracle, SquareVerdict};
use crate::brauer::hilbert::class_vanishes;
use crate::brauer::{poly_word, ConcreteClass, ConstField, FormalClass, Word};

use super::diag::{diagonalize, QuadForm};
use super::etale::EtaleAlgebra;
use super::FormsError;

/// Fields whose square classes can be written as formal words.
pub trait SquareClass: SquareOracle {
    /// The square class as a word in `-1`, rational primes and irreducible
    /// polynomials in `var`.
    fn class_word(&self, var: &str) -> Result<Word, FormsError>;
    /// A small element of the same square class.
    fn class_rep(&self) -> Self;
}

impl SquareClass for Rational {
    fn class_word(&self, _var: &str) -> Result<Word, FormsError> {
        if self.is_zero() {
            return Err(FormsError::Invalid("square class of zero".into()));
        }
        Ok(Word::from_rational(self))
    }

    fn class_rep(&self) -> Self {
        Rational::from_integer(squarefree_kernel(self))
    }
}

impl SquareClass for TowerFunc {
    fn class_word(&self, var: &str) -> Result<Word, FormsError> {
        Ok(poly_word(&(self.num() * self.den()), var)?)
    }

    fn class_rep(&self) -> Self {
        let g = (self.num() * self.den()).square_class_part();
        let lc = g.lc();
        match lc.to_rational() {
            Some(q) => {
                let k = Rational::from_integer(squarefree_kernel(&q));
                let scale = NfElem::from_rational(&(k / q));
                TowerFunc::from_poly(g.scale(&scale))
            }
            None => TowerFunc::from_poly(g),
        }
    }
}

/// `sum_{i<j} (a_i, a_j)` as a list of symbols.
pub fn w2<F: Field>(q: &QuadForm<F>) -> Vec<(F, F)> {
    let d = &q.diagonal;
    let mut out = Vec::new();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            out.push((d[i].clone(), d[j].clone()));
        }
    }
    out
}

/// Formal image of a symbol list, with no relations among generators beyond
/// those of the calculus.
pub fn formal_image<F: SquareClass>(symbols: &[(F, F)], var: &str) -> Result<FormalClass, FormsError> {
    let mut c = FormalClass::zero();
    for (a, b) in symbols {
        c.add_symbol(&a.class_word(var)?, &b.class_word(var)?);
    }
    Ok(c)
}

/// Symbols over `K(var)` as a concrete class over the constant field `k`.
pub fn concrete_class(k: &ConstField, var: &str, symbols: &[(TowerFunc, TowerFunc)]) -> Result<ConcreteClass, FormsError> {
    let mut c = ConcreteClass::new(k.clone(), var);
    for (a, b) in symbols {
        c.push(a, b)?;
    }
    Ok(c)
}

/// Whether `a / b` is a certified square. `None` when undecided.
pub fn same_square_class<F: SquareOracle>(a: &F, b: &F, cfg: &SquareConfig) -> Result<Option<bool>, FormsError> {
    let r = a.div_checked(b).ok_or_else(|| FormsError::Invalid("square class of zero".into()))?;
    Ok(match r.square_verdict(cfg)? {
        SquareVerdict::Square(_) => Some(true),
        SquareVerdict::NonSquare(_) => Some(false),
        SquareVerdict::ProbablySquare { .. } => None,
    })
}

/// Trace form data and Serre's invariant of an étale algebra.
#[derive(Clone, Debug)]
pub struct SerreData<F> {
    pub gram: Matrix<F>,
    pub form: QuadForm<F>,
    /// `det` of the Gram matrix; its square class is `d_E`.
    pub disc: F,
    pub w2: Vec<(F, F)>,
    /// `w2 + (-2, d_E)`.
    pub serre: Vec<(F, F)>,
}

pub fn serre_invariant<F: Field>(e: &EtaleAlgebra<F>) -> Result<SerreData<F>, FormsError> {
    let gram = e.trace_form();
    let d = diagonalize(&gram)?;
    if !d.verify(&gram) {
        return Err(FormsError::Invalid("congruence transform does not verify".into()));
    }
    let disc = det(&gram);
    let w = w2(&d.form);
    let mut serre = w.clone();
    serre.push((F::from_i64(-2), disc.clone()));
    Ok(SerreData { gram, form: d.form, disc, w2: w, serre })
}

/// How two forms were compared: rank, discriminant class and `w2`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantComparison {
    pub rank: bool,
    pub disc: Option<bool>,
    pub w2: Option<bool>,
    /// `formal` when the formal images agree, `concrete` when the difference
    /// was decided by residues and specialization.
    pub w2_method: &'static str,
}

impl InvariantComparison {
    pub fn passed(&self) -> bool {
        self.rank && self.disc == Some(true) && self.w2 == Some(true)
    }
}

/// Compares two diagonal forms over `K(var)` at the level of invariants.
pub fn compare_invariants(
    k: &ConstField,
    var: &str,
    a: &QuadForm<TowerFunc>,
    b: &QuadForm<TowerFunc>,
    cfg: &SquareConfig,
) -> Result<InvariantComparison, FormsError> {
    let rank = a.rank() == b.rank();
    let disc = same_square_class(&a.determinant(), &b.determinant(), cfg)?;
    let ca = concrete_class(k, var, &w2(a))?;
    let cb = concrete_class(k, var, &w2(b))?;
    let diff = ca.add(&cb)?;
    if k.degree() <= 2 && diff.to_formal()?.is_zero() {
        return Ok(InvariantComparison { rank, disc, w2: Some(true), w2_method: "formal" });
    }
    let w = diff.decide_zero(cfg)?.is_split();
    Ok(InvariantComparison { rank, disc, w2: w, w2_method: "concrete" })
}

/// Whether two sums of rational symbols agree in `Br(Q)`.
pub fn rational_classes_equal(a: &[(Rational, Rational)], b: &[(Rational, Rational)]) -> bool {
    let all: Vec<(Rational, Rational)> = a.iter().chain(b).cloned().collect();
    class_vanishes(&all, None).0
}
