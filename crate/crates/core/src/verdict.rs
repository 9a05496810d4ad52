//! Verdicts returned by every decision procedure, with replayable witnesses.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

/// A flat, replayable counterexample: a property tag, the element indices
/// involved, and any scalar multipliers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub tag: String,
    pub elements: Vec<usize>,
    pub scalars: Vec<u64>,
}

impl Witness {
    pub fn new(tag: &str, elements: Vec<usize>, scalars: Vec<u64>) -> Self {
        Witness {
            tag: tag.to_string(),
            elements,
            scalars,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Search bound that was in effect (present on Unknown, optional otherwise).
    pub depth: Option<u64>,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            status: Status::Holds,
            witness: None,
            depth: None,
        }
    }

    pub fn holds_within(bound: u64) -> Self {
        Verdict {
            status: Status::Holds,
            witness: None,
            depth: Some(bound),
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Verdict {
            status: Status::Fails,
            witness: Some(witness),
            depth: None,
        }
    }

    pub fn unknown(bound: u64) -> Self {
        Verdict {
            status: Status::Unknown,
            witness: None,
            depth: Some(bound),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            Status::Holds => write!(f, "holds"),
            Status::Unknown => write!(f, "unknown (bound {})", self.depth.unwrap_or(0)),
            Status::Fails => {
                write!(f, "fails")?;
                if let Some(w) = &self.witness {
                    write!(f, " [{} elems={:?} scalars={:?}]", w.tag, w.elements, w.scalars)?;
                }
                Ok(())
            }
        }
    }
}
