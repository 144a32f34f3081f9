use num_rational::Ratio;
use num_traits::Zero;

pub type Rational = Ratio<i64>;

/// A time bound of the form `m^a * n^b` with exact rational exponents.
/// Negative exponents are allowed (`m^3 / n^2` is a legitimate bound).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TimeBound {
    pub edge_exponent: Rational,
    pub vertex_exponent: Rational,
}

impl TimeBound {
    pub fn new(edge_exponent: Rational, vertex_exponent: Rational) -> TimeBound {
        TimeBound {
            edge_exponent,
            vertex_exponent,
        }
    }

    fn exponent_sum(&self) -> Rational {
        self.edge_exponent + self.vertex_exponent
    }
}

/// Outcome of the sufficient-condition comparison. The third variant makes
/// no incomparability claim; the test is sufficient, not complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundComparison {
    Smaller,
    WeaklySmaller,
    NotComparableBySufficientCondition,
}

impl std::fmt::Display for BoundComparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundComparison::Smaller => "Smaller",
            BoundComparison::WeaklySmaller => "WeaklySmaller",
            BoundComparison::NotComparableBySufficientCondition => {
                "NotComparableBySufficientCondition"
            }
        };
        f.write_str(s)
    }
}

/// Sub-`mn`: exponent sum strictly below 2, in exact rational arithmetic.
pub fn is_sub_mn(bound: &TimeBound) -> bool {
    bound.exponent_sum() < Rational::from_integer(2)
}

/// Is `first` a (weakly) smaller time bound than `second` for sparse
/// graphs? Smaller when the exponent sums satisfy `a2 + b2 > a1 + b1`;
/// weakly smaller when the sums tie and `a2 > a1`.
pub fn compare_bounds(first: &TimeBound, second: &TimeBound) -> BoundComparison {
    let s1 = first.exponent_sum();
    let s2 = second.exponent_sum();
    if s2 > s1 {
        BoundComparison::Smaller
    } else if s2 == s1 && second.edge_exponent > first.edge_exponent {
        BoundComparison::WeaklySmaller
    } else {
        BoundComparison::NotComparableBySufficientCondition
    }
}
