//! Closed forms for the six raising channels, the first diagonal copy and the
//! auxiliary diagonal vector, stored as factor lists.
//!
//! Variables, in order: source SO(4) label `(j₁, j₂)` and source irrep
//! `(j̄₁, j̄₂)`. An entry evaluates to
//!
//! ```text
//! sign · scale · Π prefactor · √(radical_scale · Π radicand / Π denominator) · N
//! ```
//!
//! where `N` is the family normalization (absent for the auxiliary table).
//! Shifts are doubled.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Part {
    /// `(1,1)` piece of the 14.
    Vector,
    /// `(½,½)` piece.
    Spinor,
    /// `(0,0)` piece.
    Scalar,
}

/// `num/den · j₁^p₀ j₂^p₁ j̄₁^p₂ j̄₂^p₃`.
#[derive(Debug)]
pub(super) struct Mono {
    pub num: i64,
    pub den: i64,
    pub pow: [u32; 4],
}

#[derive(Debug)]
pub(super) enum Factor {
    /// `c₀ j₁ + c₁ j₂ + c₂ j̄₁ + c₃ j̄₂ + c₄`.
    Lin([i64; 5]),
    Poly(&'static [Mono]),
}

#[derive(Debug)]
pub(super) struct Formula {
    pub sign: i64,
    pub scale: (i64, i64),
    pub radical_scale: (i64, i64),
    pub prefactor: &'static [Factor],
    pub radicand: &'static [Factor],
    pub denominator: &'static [Factor],
}

#[derive(Debug)]
pub(super) struct Entry {
    pub shift: (i64, i64),
    pub part: Part,
    pub formula: Formula,
}

const fn lin(a: i64, b: i64, c: i64, d: i64, e: i64) -> Factor {
    Factor::Lin([a, b, c, d, e])
}

const fn m(num: i64, den: i64, pow: [u32; 4]) -> Mono {
    Mono { num, den, pow }
}

/// Factors under the inverse square root of each raising-family
/// normalization, in the variables `(·, ·, j̄₁, j̄₂)`.
pub(super) static NORM_RAISE_BOTH: [Factor; 8] = [
    lin(0, 0, 2, 0, 2),
    lin(0, 0, 2, 0, 3),
    lin(0, 0, 0, 2, 1),
    lin(0, 0, 0, 2, 2),
    lin(0, 0, 1, 1, 2),
    lin(0, 0, 1, 1, 3),
    lin(0, 0, 2, 2, 3),
    lin(0, 0, 2, 2, 5),
];

pub(super) static NORM_RAISE_FIRST: [Factor; 8] = [
    lin(0, 0, 0, 1, 0),
    lin(0, 0, 2, 0, 2),
    lin(0, 0, 2, 0, 3),
    lin(0, 0, 0, 2, 2),
    lin(0, 0, 1, -1, 1),
    lin(0, 0, 1, 1, 2),
    lin(0, 0, 2, -2, 1),
    lin(0, 0, 2, 2, 3),
];

pub(super) static NORM_RAISE_SECOND: [Factor; 8] = [
    lin(0, 0, 1, -1, 0),
    lin(0, 0, 2, 0, 1),
    lin(0, 0, 2, 0, 3),
    lin(0, 0, 0, 2, 1),
    lin(0, 0, 0, 2, 2),
    lin(0, 0, 1, 1, 2),
    lin(0, 0, 2, -2, 1),
    lin(0, 0, 2, 2, 3),
];

pub(super) static NORM_RAISE_FIRST_LOWER_SECOND: [Factor; 8] = [
    lin(0, 0, 0, 1, 0),
    lin(0, 0, 2, 0, 3),
    lin(0, 0, 4, 0, 4),
    lin(0, 0, 0, 2, 1),
    lin(0, 0, 1, -1, 1),
    lin(0, 0, 1, -1, 2),
    lin(0, 0, 2, -2, 1),
    lin(0, 0, 2, -2, 3),
];

pub(super) static NORM_HALF_RAISE_BOTH: [Factor; 8] = [
    lin(0, 0, 1, -1, 0),
    lin(0, 0, 2, 0, 2),
    lin(0, 0, 0, 2, 1),
    lin(0, 0, 1, -1, 1),
    lin(0, 0, 1, 1, 1),
    lin(0, 0, 1, 1, 2),
    lin(0, 0, 1, 1, 3),
    lin(0, 0, 2, 2, 3),
];

pub(super) static NORM_HALF_RAISE_FIRST_LOWER_SECOND: [Factor; 8] = [
    lin(0, 0, 1, -1, 0),
    lin(0, 0, 2, 0, 2),
    lin(0, 0, 0, 2, 1),
    lin(0, 0, 1, -1, 1),
    lin(0, 0, 1, -1, 2),
    lin(0, 0, 1, 1, 1),
    lin(0, 0, 1, 1, 2),
    lin(0, 0, 2, -2, 1),
];

/// The diagonal normalization is `2√5 · Q^{-1/2}` with
/// `Q = 4j̄₂²(j̄₂+1)² + 11(8j̄₁²+16j̄₁+5) j̄₂(j̄₂+1) + j̄₁(j̄₁+2)(2j̄₁−1)(2j̄₁+5)`,
/// expanded here.
pub(super) static NORM_DIAGONAL: [Mono; 13] = [
    m(4, 1, [0, 0, 0, 4]),
    m(8, 1, [0, 0, 0, 3]),
    m(4, 1, [0, 0, 0, 2]),
    m(88, 1, [0, 0, 2, 2]),
    m(88, 1, [0, 0, 2, 1]),
    m(176, 1, [0, 0, 1, 2]),
    m(176, 1, [0, 0, 1, 1]),
    m(55, 1, [0, 0, 0, 2]),
    m(55, 1, [0, 0, 0, 1]),
    m(4, 1, [0, 0, 4, 0]),
    m(16, 1, [0, 0, 3, 0]),
    m(11, 1, [0, 0, 2, 0]),
    m(-10, 1, [0, 0, 1, 0]),
];

pub(super) static RAISE_BOTH: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, 1, 5), lin(1, 1, 1, 1, 6)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, -1, 1, 1, 3), lin(-1, -1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(-1, 1, 1, 1, 4), lin(-1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(1, -1, 1, 1, 4), lin(1, -1, 1, 1, 5)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(1, -1, 1, 1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(-1, 1, 1, 1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, -1, 1, 1, 3), lin(1, -1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 1]), m(-1, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(-1, -1, 1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(1, -1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4), lin(-1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (5, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[],
        },
    },
];

pub(super) static RAISE_FIRST: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, -1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, 1, 1, -1, 3), lin(-1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, -1, 1, -1, 3), lin(1, -1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(2, 1, [1, 0, 1, 0]), m(1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(-1, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(2, 1, [1, 0, 1, 0]), m(3, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(3, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(-1, 1, [0, 0, 0, 1]), m(2, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(2, 1, [0, 1, 1, 0]), m(1, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(-1, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-2, 1, [0, 1, 1, 0]), m(-3, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(-3, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 1]), m(-2, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(-3, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 1]), m(-2, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, -1, 0, 0)],
            radicand: &[lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, 1, 0, 2)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[lin(-1, 1, 1, 0, 1)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[lin(1, -1, 1, 0, 1)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (5, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[],
        },
    },
];

pub(super) static RAISE_SECOND: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, -1, 1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, 1, -1, -1), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, -1, -1), lin(1, -1, 1, -1, -2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, 1, 1, -1, -1), lin(-1, 1, 1, -1, -2), lin(1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, -1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1), lin(2, 0, 0, 0, 3)],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(2, 1, [1, 0, 0, 1]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, -1, -1, 1, 0), lin(1, 1, -1, 1, 1), lin(1, -1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(2, 1, [1, 0, 0, 1]), m(2, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(-1, 1, [0, 0, 2, 0]), m(-2, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(2, 1, [0, 0, 0, 1])])],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(2, 1, [0, 1, 0, 1]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-2, 1, [0, 1, 0, 1]), m(-2, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(-2, 1, [0, 0, 0, 1])])],
            radicand: &[lin(1, 1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 2]), m(-2, 1, [0, 0, 0, 1])])],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(2, 2, 0, -2, 1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(2, 2, 0, 2, 3)],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(-2, 2, 0, 2, 1)],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(2, -2, 0, 2, 1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: -1,
            scale: (1, 2),
            radical_scale: (10, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[],
        },
    },
];

pub(super) static RAISE_FIRST_LOWER_SECOND: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(-1, -1, 1, 1, -1), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, -1, 4), lin(1, 1, 1, -1, 5)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -3), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, 1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(-1, 1, 1, -1, 3), lin(-1, 1, 1, -1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, 1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, -1, 1, -1, 3), lin(1, -1, 1, -1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, -1, 1, -1, 3), lin(1, 1, 1, -1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(-1, 1, 1, -1, 3), lin(1, 1, 1, -1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(-1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 1]), m(3, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(3, 1, [0, 0, 0, 1]), m(2, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, -1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, -1, 3), lin(1, -1, 1, -1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, -1, 3), lin(-1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (5, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, -1, 3)],
            denominator: &[],
        },
    },
];

pub(super) static HALF_RAISE_BOTH: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0)],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, 1, 5)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0)],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1)],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, -1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 1, 0]), m(1, 1, [1, 0, 0, 1]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 1]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 1, 0]), m(1, 1, [1, 0, 0, 1]), m(2, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0])])],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 1, 0]), m(1, 1, [0, 1, 0, 1]), m(1, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 1]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 1, 0]), m(-1, 1, [0, 1, 0, 1]), m(-2, 1, [0, 1, 0, 0])])],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, -1, 1, 1, 2), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, 1, 0, 0, 1), Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(-1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(-2, 1, [0, 0, 1, 1]), m(1, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(-1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(-1, -1, 1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(2, 2, -1, -1, 1)],
            radicand: &[lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(2, 2, 1, 1, 3)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(-2, 2, 1, 1, 1)],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(2, -2, 1, 1, 1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (10, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, 1, 0, 0, 1)],
            radicand: &[lin(-1, -1, 1, 1, 1), lin(1, -1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[],
        },
    },
];

pub(super) static HALF_RAISE_FIRST_LOWER_SECOND: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0)],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, -1, 1, 1, -1), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4), lin(1, 1, 1, -1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, -1, 1, -2), lin(1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1)],
            radicand: &[lin(1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, 1, 3), lin(-1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1)],
            radicand: &[lin(-1, 1, 1, 1, 0), lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, 1, 3), lin(1, -1, 1, -1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 1, 0]), m(-1, 1, [1, 0, 0, 1]), m(-1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 1, 0]), m(-1, 1, [1, 0, 0, 1]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2), lin(-1, 1, 1, 1, 2), lin(-1, 1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 1, 0]), m(-1, 1, [0, 1, 0, 1]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 1, 0]), m(-1, 1, [0, 0, 0, 1])])],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 1, 0]), m(1, 1, [0, 1, 0, 1]), m(-1, 1, [0, 1, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0])]), Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(-1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 2, 0]), m(2, 1, [0, 0, 1, 1]), m(3, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 2]), m(3, 1, [0, 0, 0, 1]), m(2, 1, [0, 0, 0, 0])])],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(2, 2, -1, 1, 2)],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(2, 2, 1, -1, 2)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(2, -2, -1, 1, 0)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, -1, 1, -1, 2)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (2, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(2, -2, 1, -1, 0)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(-1, 1, 1, -1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: 1,
            scale: (1, 2),
            radical_scale: (10, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, 1, 0, 0, 1)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, -1, 2)],
            denominator: &[],
        },
    },
];

pub(super) static DIAGONAL_FIRST: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, -1, -1, 0), lin(1, 1, -1, 1, 1), lin(1, 1, -1, -1, 1), lin(1, 1, 1, -1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, 1, 0), lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, 1, 2), lin(-1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [4, 0, 0, 0]), m(2, 1, [3, 0, 0, 0]), m(-10, 1, [2, 2, 0, 0]), m(-10, 1, [2, 1, 0, 0]), m(-2, 1, [2, 0, 2, 0]), m(-4, 1, [2, 0, 1, 0]), m(-2, 1, [2, 0, 0, 2]), m(-2, 1, [2, 0, 0, 1]), m(-1, 1, [2, 0, 0, 0]), m(-10, 1, [1, 2, 0, 0]), m(-10, 1, [1, 1, 0, 0]), m(-2, 1, [1, 0, 2, 0]), m(-4, 1, [1, 0, 1, 0]), m(-2, 1, [1, 0, 0, 2]), m(-2, 1, [1, 0, 0, 1]), m(-2, 1, [1, 0, 0, 0]), m(1, 1, [0, 4, 0, 0]), m(2, 1, [0, 3, 0, 0]), m(-2, 1, [0, 2, 2, 0]), m(-4, 1, [0, 2, 1, 0]), m(-2, 1, [0, 2, 0, 2]), m(-2, 1, [0, 2, 0, 1]), m(-1, 1, [0, 2, 0, 0]), m(-2, 1, [0, 1, 2, 0]), m(-4, 1, [0, 1, 1, 0]), m(-2, 1, [0, 1, 0, 2]), m(-2, 1, [0, 1, 0, 1]), m(-2, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 4, 0]), m(4, 1, [0, 0, 3, 0]), m(-2, 1, [0, 0, 2, 2]), m(-2, 1, [0, 0, 2, 1]), m(5, 1, [0, 0, 2, 0]), m(-4, 1, [0, 0, 1, 2]), m(-4, 1, [0, 0, 1, 1]), m(2, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 4]), m(2, 1, [0, 0, 0, 3]), m(-1, 1, [0, 0, 0, 2]), m(-2, 1, [0, 0, 0, 1])])],
            radicand: &[],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[lin(2, 2, 0, 0, 3)],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 1), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[lin(2, 2, 0, 0, 1)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[lin(2, -2, 0, 0, 1)],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 8),
            radical_scale: (1, 1),
            prefactor: &[lin(2, -2, 0, 0, -1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: -1,
            scale: (1, 10),
            radical_scale: (5, 1),
            prefactor: &[Factor::Poly(&[m(5, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(5, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(-3, 1, [0, 0, 2, 0]), m(-6, 1, [0, 0, 1, 0]), m(-3, 1, [0, 0, 0, 2]), m(-3, 1, [0, 0, 0, 1])])],
            radicand: &[],
            denominator: &[],
        },
    },
];

pub(super) static DIAGONAL_AUX: [Entry; 14] = [
    Entry {
        shift: (2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, -1, 0, 0, 0)],
            radicand: &[lin(1, 1, -1, -1, 0), lin(1, 1, -1, 1, 1), lin(1, 1, -1, -1, 1), lin(1, 1, 1, -1, 2), lin(1, 1, -1, 1, 2), lin(1, 1, 1, 1, 3), lin(1, 1, 1, -1, 3), lin(1, 1, 1, 1, 4)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 2, 0, 0, 3)],
        },
    },
    Entry {
        shift: (-2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, -1, 0, 0, 0)],
            radicand: &[lin(1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, -1, 1, -1), lin(1, 1, 1, 1, 2), lin(-1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (-2, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(1, 1, 0, 0, 1)],
            radicand: &[lin(1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, -1, 1, -1, -1), lin(-1, 1, 1, 1, 2), lin(-1, 1, 1, -1, 2), lin(-1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), Factor::Poly(&[m(2, 1, [0, 2, 0, 0]), m(5, 1, [0, 1, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(1, 1, 0, 0, 1)],
            radicand: &[lin(-1, 1, 1, 1, 0), lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(-1, 1, 1, -1, -1), lin(1, -1, 1, 1, 2), lin(1, -1, 1, -1, 2), lin(1, -1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1), Factor::Poly(&[m(2, 1, [2, 0, 0, 0]), m(5, 1, [1, 0, 0, 0]), m(3, 1, [0, 0, 0, 0])])],
        },
    },
    Entry {
        shift: (2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(2, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0]), m(-1, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(1, -1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(2, 0, 0, 0, 3), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-2, 0),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 0, 0])])],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(1, -1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, 1, 1, 2), lin(-1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(2, 0, 0, 0, -1), lin(0, 1, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(-1, 1, [2, 0, 0, 0]), m(-1, 1, [1, 0, 0, 0]), m(1, 1, [0, 2, 0, 0]), m(2, 1, [0, 1, 0, 0]), m(1, 1, [0, 0, 0, 0])])],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(1, 1, -1, 1, 1), lin(-1, 1, 1, 1, 2), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(0, 1, 0, 0, 1), lin(0, 2, 0, 0, 3), lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, -2),
        part: Part::Vector,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [2, 0, 0, 0]), m(1, 1, [1, 0, 0, 0]), m(-1, 1, [0, 2, 0, 0])])],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(1, 1, -1, 1, 0), lin(-1, 1, 1, 1, 1), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, -1, 1, -1, 1), lin(1, 1, 1, 1, 2), lin(1, -1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 0), lin(0, 2, 0, 0, -1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Vector,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[Factor::Poly(&[m(1, 1, [6, 0, 0, 0]), m(3, 1, [5, 0, 0, 0]), m(-1, 1, [4, 2, 0, 0]), m(-1, 1, [4, 1, 0, 0]), m(-2, 1, [4, 0, 2, 0]), m(-4, 1, [4, 0, 1, 0]), m(-2, 1, [4, 0, 0, 2]), m(-2, 1, [4, 0, 0, 1]), m(1, 1, [4, 0, 0, 0]), m(-2, 1, [3, 2, 0, 0]), m(-2, 1, [3, 1, 0, 0]), m(-4, 1, [3, 0, 2, 0]), m(-8, 1, [3, 0, 1, 0]), m(-4, 1, [3, 0, 0, 2]), m(-4, 1, [3, 0, 0, 1]), m(-3, 1, [3, 0, 0, 0]), m(-1, 1, [2, 4, 0, 0]), m(-2, 1, [2, 3, 0, 0]), m(4, 1, [2, 2, 2, 0]), m(8, 1, [2, 2, 1, 0]), m(4, 1, [2, 2, 0, 2]), m(4, 1, [2, 2, 0, 1]), m(2, 1, [2, 2, 0, 0]), m(4, 1, [2, 1, 2, 0]), m(8, 1, [2, 1, 1, 0]), m(4, 1, [2, 1, 0, 2]), m(4, 1, [2, 1, 0, 1]), m(3, 1, [2, 1, 0, 0]), m(1, 1, [2, 0, 4, 0]), m(4, 1, [2, 0, 3, 0]), m(-2, 1, [2, 0, 2, 2]), m(-2, 1, [2, 0, 2, 1]), m(3, 1, [2, 0, 2, 0]), m(-4, 1, [2, 0, 1, 2]), m(-4, 1, [2, 0, 1, 1]), m(-2, 1, [2, 0, 1, 0]), m(1, 1, [2, 0, 0, 4]), m(2, 1, [2, 0, 0, 3]), m(-3, 1, [2, 0, 0, 2]), m(-4, 1, [2, 0, 0, 1]), m(-2, 1, [2, 0, 0, 0]), m(-1, 1, [1, 4, 0, 0]), m(-2, 1, [1, 3, 0, 0]), m(4, 1, [1, 2, 2, 0]), m(8, 1, [1, 2, 1, 0]), m(4, 1, [1, 2, 0, 2]), m(4, 1, [1, 2, 0, 1]), m(3, 1, [1, 2, 0, 0]), m(4, 1, [1, 1, 2, 0]), m(8, 1, [1, 1, 1, 0]), m(4, 1, [1, 1, 0, 2]), m(4, 1, [1, 1, 0, 1]), m(4, 1, [1, 1, 0, 0]), m(1, 1, [1, 0, 4, 0]), m(4, 1, [1, 0, 3, 0]), m(-2, 1, [1, 0, 2, 2]), m(-2, 1, [1, 0, 2, 1]), m(5, 1, [1, 0, 2, 0]), m(-4, 1, [1, 0, 1, 2]), m(-4, 1, [1, 0, 1, 1]), m(2, 1, [1, 0, 1, 0]), m(1, 1, [1, 0, 0, 4]), m(2, 1, [1, 0, 0, 3]), m(-1, 1, [1, 0, 0, 2]), m(-2, 1, [1, 0, 0, 1]), m(1, 1, [0, 6, 0, 0]), m(3, 1, [0, 5, 0, 0]), m(-2, 1, [0, 4, 2, 0]), m(-4, 1, [0, 4, 1, 0]), m(-2, 1, [0, 4, 0, 2]), m(-2, 1, [0, 4, 0, 1]), m(1, 1, [0, 4, 0, 0]), m(-4, 1, [0, 3, 2, 0]), m(-8, 1, [0, 3, 1, 0]), m(-4, 1, [0, 3, 0, 2]), m(-4, 1, [0, 3, 0, 1]), m(-3, 1, [0, 3, 0, 0]), m(1, 1, [0, 2, 4, 0]), m(4, 1, [0, 2, 3, 0]), m(-2, 1, [0, 2, 2, 2]), m(-2, 1, [0, 2, 2, 1]), m(3, 1, [0, 2, 2, 0]), m(-4, 1, [0, 2, 1, 2]), m(-4, 1, [0, 2, 1, 1]), m(-2, 1, [0, 2, 1, 0]), m(1, 1, [0, 2, 0, 4]), m(2, 1, [0, 2, 0, 3]), m(-3, 1, [0, 2, 0, 2]), m(-4, 1, [0, 2, 0, 1]), m(-2, 1, [0, 2, 0, 0]), m(1, 1, [0, 1, 4, 0]), m(4, 1, [0, 1, 3, 0]), m(-2, 1, [0, 1, 2, 2]), m(-2, 1, [0, 1, 2, 1]), m(5, 1, [0, 1, 2, 0]), m(-4, 1, [0, 1, 1, 2]), m(-4, 1, [0, 1, 1, 1]), m(2, 1, [0, 1, 1, 0]), m(1, 1, [0, 1, 0, 4]), m(2, 1, [0, 1, 0, 3]), m(-1, 1, [0, 1, 0, 2]), m(-2, 1, [0, 1, 0, 1])])],
            radicand: &[],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, -1, 0, 0, 0), lin(2, 2, 0, 0, 3)],
            radicand: &[lin(-1, -1, 1, 1, 0), lin(1, 1, -1, 1, 1), lin(1, 1, 1, -1, 2), lin(1, 1, 1, 1, 3)],
            denominator: &[lin(1, 0, 0, 0, 1), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: -1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, -1, 0, 0, 0), lin(1, -1, 0, 0, 0), lin(2, 2, 0, 0, 1)],
            radicand: &[lin(1, 1, -1, 1, 0), lin(-1, -1, 1, 1, 1), lin(1, 1, 1, -1, 1), lin(1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 0)],
        },
    },
    Entry {
        shift: (1, -1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(1, 1, 0, 0, 1), lin(-2, 2, 0, 0, -1)],
            radicand: &[lin(-1, 1, 1, -1, 0), lin(-1, 1, 1, 1, 1), lin(1, -1, 1, -1, 1), lin(1, -1, 1, 1, 2)],
            denominator: &[lin(0, 1, 0, 0, 0), lin(1, 0, 0, 0, 1)],
        },
    },
    Entry {
        shift: (-1, 1),
        part: Part::Spinor,
        formula: Formula {
            sign: 1,
            scale: (1, 4),
            radical_scale: (1, 1),
            prefactor: &[lin(1, 1, 0, 0, 1), lin(1, 1, 0, 0, 1), lin(2, -2, 0, 0, -1)],
            radicand: &[lin(1, -1, 1, -1, 0), lin(1, -1, 1, 1, 1), lin(-1, 1, 1, -1, 1), lin(-1, 1, 1, 1, 2)],
            denominator: &[lin(1, 0, 0, 0, 0), lin(0, 1, 0, 0, 1)],
        },
    },
    Entry {
        shift: (0, 0),
        part: Part::Scalar,
        formula: Formula {
            sign: -1,
            scale: (1, 10),
            radical_scale: (5, 1),
            prefactor: &[Factor::Poly(&[m(-5, 1, [4, 0, 0, 0]), m(-10, 1, [3, 0, 0, 0]), m(10, 1, [2, 2, 0, 0]), m(10, 1, [2, 1, 0, 0]), m(-5, 1, [2, 0, 0, 0]), m(10, 1, [1, 2, 0, 0]), m(10, 1, [1, 1, 0, 0]), m(-5, 1, [0, 4, 0, 0]), m(-10, 1, [0, 3, 0, 0]), m(-5, 1, [0, 2, 0, 0]), m(1, 1, [0, 0, 4, 0]), m(4, 1, [0, 0, 3, 0]), m(-2, 1, [0, 0, 2, 2]), m(-2, 1, [0, 0, 2, 1]), m(5, 1, [0, 0, 2, 0]), m(-4, 1, [0, 0, 1, 2]), m(-4, 1, [0, 0, 1, 1]), m(2, 1, [0, 0, 1, 0]), m(1, 1, [0, 0, 0, 4]), m(2, 1, [0, 0, 0, 3]), m(-1, 1, [0, 0, 0, 2]), m(-2, 1, [0, 0, 0, 1])])],
            radicand: &[],
            denominator: &[],
        },
    },
];
