use std::fmt;

use serde::{Deserialize, Serialize};

/// Variable labels that appear in this crate's polynomials.
///
/// `E` is the shift symbol of recurrence operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "E")]
    E,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::S, Var::Z, Var::T, Var::E];

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::S => "s",
            Var::Z => "z",
            Var::T => "t",
            Var::E => "E",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
