//! Exact arithmetic: rationals, rational angles, real cyclotomic numbers and
//! signatures of rational symmetric forms.

mod algreal;
mod angle;
pub(crate) mod cyclotomic;
mod forms;
mod interval;
mod rational;

pub use algreal::{as_rational, cosec2_half, cot_half, sign_of, AlgReal};
pub(crate) use algreal::rational_to_f64;
pub use angle::Angle;
pub use forms::form_signature;
pub use rational::{
    format_rational, integer, parse_rational, rational, serde_rational, serde_rational_vec, Rational,
};
