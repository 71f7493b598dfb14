use serde::{Deserialize, Serialize};

/// A failing input, replayable by the checker that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based basis indices (a pair or triple for table checks).
    pub basis: Vec<usize>,
    pub detail: String,
}

/// Verdict of a checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    /// Failure at the given 0-based basis indices.
    pub fn fail(basis: &[usize], detail: impl Into<String>) -> Self {
        Self {
            holds: false,
            witness: Some(Witness {
                basis: basis.iter().map(|i| i + 1).collect(),
                detail: detail.into(),
            }),
        }
    }

    pub fn and_then(self, next: impl FnOnce() -> Check) -> Check {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

/// A named scalar relation and its value; zero means the relation holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual<E> {
    pub name: String,
    pub value: E,
}

impl<E> Residual<E> {
    pub fn new(name: impl Into<String>, value: E) -> Self {
        Self {
            name: name.into(),
            value,
        }
    }
}

/// Whether every residual vanishes.
pub fn all_zero<F: crate::field::Field>(f: &F, residuals: &[Residual<F::Elem>]) -> bool {
    residuals.iter().all(|r| f.is_zero(&r.value))
}
