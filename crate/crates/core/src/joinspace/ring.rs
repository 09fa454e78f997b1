use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A graded generator of a cohomology ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// `coefficient * prod generator_i^exponents[i] = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub coefficient: BigInt,
    pub exponents: Vec<u32>,
}

/// `Z[generators] / (relations)` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    relations: Vec<Relation>,
}

impl RingPresentation {
    /// Builds a presentation; relation monomials are given as `(generator index, exponent)`
    /// pairs. Zero coefficients and zero-degree generators are refused.
    pub fn new(generators: Vec<(&str, u32)>, relations: Vec<(BigInt, Vec<(usize, u32)>)>) -> Option<Self> {
        if generators.iter().any(|&(_, d)| d == 0) {
            return None;
        }
        let n = generators.len();
        let relations = relations
            .into_iter()
            .map(|(coefficient, monomial)| {
                if coefficient.is_zero() {
                    return None;
                }
                let mut exponents = alloc::vec![0; n];
                for (idx, e) in monomial {
                    *exponents.get_mut(idx)? += e;
                }
                Some(Relation { coefficient, exponents })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            generators: generators
                .into_iter()
                .map(|(name, degree)| Generator {
                    name: name.into(),
                    degree,
                })
                .collect(),
            relations,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Total degree of a relation's monomial.
    pub fn relation_degree(&self, rel: &Relation) -> u32 {
        rel.exponents
            .iter()
            .zip(&self.generators)
            .map(|(e, g)| e * g.degree)
            .sum()
    }

    /// Looks up the relation whose monomial has exactly these exponents.
    pub fn relation_for(&self, exponents: &[u32]) -> Option<&Relation> {
        self.relations.iter().find(|r| r.exponents == exponents)
    }

    /// Relation rendered as text, e.g. `25x^2` or `xy`.
    pub fn format_relation(&self, rel: &Relation) -> String {
        let mut s = String::new();
        if !rel.coefficient.is_one() {
            s.push_str(&alloc::format!("{}", rel.coefficient));
        }
        for (e, g) in rel.exponents.iter().zip(&self.generators) {
            match e {
                0 => {}
                1 => s.push_str(&g.name),
                _ => s.push_str(&alloc::format!("{}^{}", g.name, e)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Z[")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&g.name)?;
        }
        f.write_str("]/(")?;
        for (i, r) in self.relations.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.format_relation(r))?;
        }
        f.write_str(")")
    }
}
