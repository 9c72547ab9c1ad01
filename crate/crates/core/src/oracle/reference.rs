//! 300-bit astro-float values of the elementary operations, for auditing
//! interval enclosures at f64 sample points.

use super::gamma::to_float;
use crate::error::{Error, Result};
use crate::interval::float::Float;
use astro_float::{BigFloat, Consts, RoundingMode};
use std::cell::RefCell;

/// Working precision of the reference.
pub const REFERENCE_BITS: usize = 300;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Option<Consts>> = const { RefCell::new(None) };
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> Result<R>) -> Result<R> {
    CONSTS.with(|c| {
        let mut c = c.borrow_mut();
        if c.is_none() {
            *c = Some(Consts::new().map_err(|e| Error::DomainError(format!("astro-float: {e:?}")))?);
        }
        f(c.as_mut().expect("initialised above"))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefOp {
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    Exp,
    Ln,
    /// x^y = exp(y ln x)
    Pow,
}

impl RefOp {
    pub const ALL: [RefOp; 8] = [RefOp::Add, RefOp::Sub, RefOp::Mul, RefOp::Div, RefOp::Sqrt, RefOp::Exp, RefOp::Ln, RefOp::Pow];

    pub fn is_binary(self) -> bool {
        matches!(self, RefOp::Add | RefOp::Sub | RefOp::Mul | RefOp::Div | RefOp::Pow)
    }
}

/// `op(x, y)` (y ignored for unary ops) rounded to nearest at 300 bits.
pub fn reference_value(op: RefOp, x: f64, y: f64) -> Result<Float> {
    with_consts(|cc| eval(op, x, y, cc))
}

fn eval(op: RefOp, x: f64, y: f64, cc: &mut Consts) -> Result<Float> {
    let w = REFERENCE_BITS;
    let a = BigFloat::from_f64(x, w);
    let b = BigFloat::from_f64(y, w);
    let domain = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::DomainError(what.into())) };
    let v = match op {
        RefOp::Add => a.add(&b, w, RM),
        RefOp::Sub => a.sub(&b, w, RM),
        RefOp::Mul => a.mul(&b, w, RM),
        RefOp::Div => {
            domain(y != 0.0, "division by zero")?;
            a.div(&b, w, RM)
        }
        RefOp::Sqrt => {
            domain(x >= 0.0, "sqrt of a negative number")?;
            a.sqrt(w, RM)
        }
        RefOp::Exp => a.exp(w, RM, cc),
        RefOp::Ln => {
            domain(x > 0.0, "ln of a nonpositive number")?;
            a.ln(w, RM, cc)
        }
        RefOp::Pow => {
            domain(x > 0.0, "pow of a nonpositive base")?;
            a.ln(w, RM, cc).mul(&b, w, RM).exp(w, RM, cc)
        }
    };
    to_float(&v)
}

/// π and e at 300 bits.
pub fn reference_pi() -> Result<Float> {
    with_consts(|cc| to_float(&cc.pi(REFERENCE_BITS, RM)))
}

pub fn reference_e() -> Result<Float> {
    with_consts(|cc| to_float(&cc.e(REFERENCE_BITS, RM)))
}
