use serde::Serialize;

use crate::constructions::{factor_hyperfield, sign_hyperfield, PrimeFieldSpec, QSubgroup, SubgroupSpec};
use crate::error::Result;
use crate::sgntrop::{st_orderings, SignedValueHyperfield};

use super::orderings::enumerate_orderings;
use super::qsquares::q_squares_ordering_count;

/// A field with a multiplicative subgroup `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CrInstance {
    Fp { p: u64, subgroup: SubgroupSpec },
    Q(QSubgroup),
}

/// Both sides of `|X(K_T)| = |X(K | T)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrCheck {
    pub instance: CrInstance,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub method: String,
}

/// Counts orderings of the factor hyperfield and orderings of `K` that
/// contain `T`. `Q` has the single ordering `Q⁺`, and finite fields have none.
pub fn theorem_cr_check(instance: &CrInstance, height: u64, window: i64) -> Result<CrCheck> {
    let (lhs, rhs, method) = match instance {
        CrInstance::Fp { p, subgroup } => {
            let f = factor_hyperfield(PrimeFieldSpec::new(*p)?, subgroup)?;
            let lhs = enumerate_orderings(&f.structure)?.len();
            (lhs, 0, "subgroup search on the factor table".to_string())
        }
        CrInstance::Q(t) => {
            let t = t.validate()?;
            // Every listed subgroup consists of positive rationals.
            let rhs = 1;
            match t {
                QSubgroup::Positives => (
                    enumerate_orderings(&sign_hyperfield())?.len(),
                    rhs,
                    "Q/positives is the sign hyperfield".into(),
                ),
                QSubgroup::PositivePUnits(p) => {
                    let f = SignedValueHyperfield::padic(p)?;
                    (
                        st_orderings(&f, window).len(),
                        rhs,
                        format!("characters of Z filtered on the window [-{window}, {window}]"),
                    )
                }
                QSubgroup::Squares => (
                    q_squares_ordering_count(height)?,
                    rhs,
                    "I_4 is the positive cone".into(),
                ),
            }
        }
    };
    Ok(CrCheck {
        instance: instance.clone(),
        lhs,
        rhs,
        holds: lhs == rhs,
        method,
    })
}
