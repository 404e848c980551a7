//! Named recurrences shipped with the crate.

use crate::recurrence::Recurrence;

pub struct Preset {
    pub name: &'static str,
    /// `a_1..a_m`
    pub coefficients: &'static [i64],
    /// `s_1..s_m`
    pub initial: &'static [i64],
    pub description: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fibonacci",
        coefficients: &[1, 1],
        initial: &[1, 1],
        description: "F_{k+2} = F_{k+1} + F_k",
    },
    Preset {
        name: "lucas",
        coefficients: &[1, 1],
        initial: &[1, 3],
        description: "L_{k+2} = L_{k+1} + L_k",
    },
    Preset {
        name: "pell",
        coefficients: &[1, 2],
        initial: &[1, 2],
        description: "P_{k+2} = 2 P_{k+1} + P_k",
    },
    Preset {
        name: "tribonacci",
        coefficients: &[1, 1, 1],
        initial: &[1, 1, 2],
        description: "T_{k+3} = T_{k+2} + T_{k+1} + T_k",
    },
    Preset {
        name: "gauss-alt",
        coefficients: &[-1, 0],
        initial: &[1, 1],
        description: "s_{k+2} = -s_k (roots +-i)",
    },
];

pub fn names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|p| p.name)
}

pub fn find(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

/// Validated recurrence for a preset name.
pub fn get(name: &str) -> Option<Recurrence> {
    find(name).map(|p| p.recurrence().expect("presets are valid"))
}

impl Preset {
    pub fn recurrence(&self) -> Result<Recurrence, crate::recurrence::RecurrenceError> {
        Recurrence::from_i64s(self.coefficients, self.initial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_validates() {
        for p in PRESETS {
            assert!(p.recurrence().is_ok(), "{}", p.name);
        }
        assert!(get("nope").is_none());
        assert_eq!(names().count(), 5);
    }

    #[test]
    fn pell_terms() {
        let p = get("pell").unwrap();
        assert_eq!(p.term(5), crate::exactmath::rational_from_i64(29));
    }
}
