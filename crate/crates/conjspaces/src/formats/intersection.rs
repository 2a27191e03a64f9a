//! Intersection-form JSON for the 4-complex builder: `diagonal` holds the
//! integer `eta` coefficients (its length is the number of spheres) and
//! `offdiagonal` lists 1-based `[i, j, coefficient]` Whitehead entries.
//!
//! ```json
//! {"diagonal": [1, 0], "offdiagonal": [[1, 2, 1]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::constructions::AttachingElement;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct IntersectionForm {
    pub diagonal: Vec<i64>,
    #[serde(default)]
    pub offdiagonal: Vec<(usize, usize, i64)>,
}

impl IntersectionForm {
    pub fn sphere_count(&self) -> usize {
        self.diagonal.len()
    }

    pub fn attaching_element(&self) -> Result<AttachingElement> {
        let n = self.diagonal.len();
        let mut attach = AttachingElement::zero();
        for (i, &c) in self.diagonal.iter().enumerate() {
            attach.add_eta(i, c);
        }
        for &(i, j, c) in &self.offdiagonal {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Invalid(format!(
                    "offdiagonal index ({i}, {j}) out of range 1..={n}"
                )));
            }
            attach.add_omega(i - 1, j - 1, c)?;
        }
        Ok(attach)
    }

    pub fn from_attachment(num_spheres: usize, attach: &AttachingElement) -> Self {
        let diagonal = (0..num_spheres).map(|i| attach.eta_coefficient(i)).collect();
        let mut offdiagonal = Vec::new();
        for i in 0..num_spheres {
            for j in (i + 1)..num_spheres {
                let c = attach.omega_coefficient(i, j);
                if c != 0 {
                    offdiagonal.push((i + 1, j + 1, c));
                }
            }
        }
        IntersectionForm {
            diagonal,
            offdiagonal,
        }
    }
}

pub fn parse(text: &str) -> Result<IntersectionForm> {
    serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))
}

pub fn print(form: &IntersectionForm) -> String {
    let mut s = serde_json::to_string(form).expect("form serializes");
    s.push('\n');
    s
}
