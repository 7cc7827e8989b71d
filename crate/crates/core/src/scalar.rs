//! Scalar abstraction for edge weights and matrix entries.
//!
//! Everything downstream (classification, elimination, interpolation) only
//! needs field arithmetic, exact zero tests, and sign queries, so the whole
//! crate is generic over [`Scalar`]. The intended instantiation is
//! [`num_rational::BigRational`] (see the [`crate::Rat`] alias): the cycle
//! classification tests exact cancellation of weight products, which is a
//! measure-zero condition that inexact types cannot decide reliably.

use std::fmt;

use num_traits::{Num, Signed};

/// Field-like scalar with exact equality and a sign.
pub trait Scalar: Num + Signed + Clone + PartialOrd + fmt::Debug + fmt::Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialOrd + fmt::Debug + fmt::Display {}
