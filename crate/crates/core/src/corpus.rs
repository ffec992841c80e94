//! Built-in datasets, stored as listing files under `data/`.
//!
//! Files are compiled into the library; setting `SHELLKIT_DATA_DIR` makes
//! [`load_builtin`] read `<dir>/<file>` instead. Every load re-verifies the
//! dataset against its expected summary.

use std::path::PathBuf;

use serde::Serialize;

use crate::complex::{Complex, FVector};
use crate::error::{Error, Result};
use crate::format::{parse_listing, Listing, Tag};
use crate::shelling::{verify_shelling, ShellingOrder};

pub const DATA_DIR_ENV: &str = "SHELLKIT_DATA_DIR";

/// Expected summary checked on every load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub facets: usize,
    pub f_vector: Option<Vec<u64>>,
    /// Blue-tagged steps; when set they must be exactly the boundary-glued steps.
    pub blue: Option<usize>,
    pub red_blocks: usize,
    pub green_blocks: usize,
}

struct DatasetDef {
    name: &'static str,
    file: &'static str,
    text: &'static str,
    note: &'static str,
    shelling: bool,
    expected: Expected,
}

const fn expected(facets: usize) -> Expected {
    Expected {
        facets,
        f_vector: None,
        blue: None,
        red_blocks: 0,
        green_blocks: 0,
    }
}

fn definitions() -> Vec<DatasetDef> {
    vec![
        DatasetDef {
            name: "austere6",
            file: "austere6.cplx",
            text: include_str!("../data/austere6.cplx"),
            note: "connected austere 3-complex on 6 vertices, not connected in codimension one",
            shelling: false,
            expected: expected(3),
        },
        DatasetDef {
            name: "austere7",
            file: "austere7.cplx",
            text: include_str!("../data/austere7.cplx"),
            note:
                "austere 3-complex on 7 vertices, connected in codimension one, not Cohen-Macaulay",
            shelling: false,
            expected: expected(7),
        },
        DatasetDef {
            name: "austere10",
            file: "austere10.cplx",
            text: include_str!("../data/austere10.cplx"),
            note: "austere 3-complex on 10 vertices, Cohen-Macaulay away from characteristic 2",
            shelling: false,
            expected: expected(32),
        },
        DatasetDef {
            name: "echo_k4_example",
            file: "echo_k4_example.cplx",
            text: include_str!("../data/echo_k4_example.cplx"),
            note: "echo of the 2-complex (1,2,3),(2,3,4) on 4 vertices",
            shelling: false,
            expected: expected(29),
        },
        DatasetDef {
            name: "tetra_gamma",
            file: "tetra_gamma.cplx",
            text: include_str!("../data/tetra_gamma.cplx"),
            note: "boundary of the tetrahedron: shellable but not contractible",
            shelling: false,
            expected: Expected {
                f_vector: Some(vec![1, 4, 6, 4]),
                ..expected(4)
            },
        },
        DatasetDef {
            name: "tetra_partial_shelling",
            file: "tetra_partial_shelling.shell",
            text: include_str!("../data/tetra_partial_shelling.shell"),
            note: "42-step partial shelling of the echo of the tetrahedron boundary",
            shelling: true,
            expected: expected(42),
        },
        DatasetDef {
            name: "quiet8",
            file: "quiet8.cplx",
            text: include_str!("../data/quiet8.cplx"),
            note: "quiet shellable contractible 2-complex on 8 vertices",
            shelling: false,
            expected: Expected {
                f_vector: Some(vec![1, 8, 28, 21]),
                ..expected(21)
            },
        },
        DatasetDef {
            name: "quiet8_shelling",
            file: "quiet8_shelling.shell",
            text: include_str!("../data/quiet8_shelling.shell"),
            note: "shelling of quiet8 tagged by the number of new edges per step",
            shelling: true,
            expected: Expected {
                f_vector: Some(vec![1, 8, 28, 21]),
                blue: Some(0),
                red_blocks: 1,
                green_blocks: 5,
                ..expected(21)
            },
        },
        DatasetDef {
            name: "echo16_shelling",
            file: "echo16_shelling.shell",
            text: include_str!("../data/echo16_shelling.shell"),
            note: "shelling of the austere echo of quiet8 on 16 vertices",
            shelling: true,
            expected: Expected {
                facets: 280,
                f_vector: Some(vec![1, 16, 120, 280, 280]),
                blue: Some(105),
                red_blocks: 1,
                green_blocks: 5,
            },
        },
    ]
}

/// Names accepted by [`load_builtin`].
pub fn builtin_names() -> Vec<&'static str> {
    definitions().iter().map(|s| s.name).collect()
}

#[derive(Clone, Debug)]
pub struct NamedDataset {
    pub name: String,
    pub note: String,
    pub file: String,
    pub listing: Listing,
    pub complex: Complex,
    pub shelling: Option<ShellingOrder>,
    pub expected: Expected,
}

impl NamedDataset {
    /// Steps tagged `@blue`, in order.
    pub fn blue_steps(&self) -> Vec<usize> {
        self.listing
            .entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.tag == Some(Tag::Blue))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn block_tag_count(&self, tag: Tag) -> usize {
        self.listing
            .blocks
            .iter()
            .filter(|b| b.tag == Some(tag))
            .count()
            + self
                .listing
                .entries
                .iter()
                .filter(|e| e.tag == Some(tag))
                .count()
    }

    /// The raw listing text as stored.
    pub fn to_text(&self) -> String {
        self.listing.to_text()
    }
}

pub fn load_builtin(name: &str) -> Result<NamedDataset> {
    let def = definitions()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownDataset(name.to_string()))?;
    let text = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => std::fs::read_to_string(PathBuf::from(dir).join(def.file))?,
        None => def.text.to_string(),
    };
    let listing = parse_listing(&text)?;
    let complex = listing.to_complex()?;
    let shelling = if def.shelling {
        Some(listing.to_order()?)
    } else {
        None
    };
    let ds = NamedDataset {
        name: def.name.to_string(),
        note: def.note.to_string(),
        file: def.file.to_string(),
        listing,
        complex,
        shelling,
        expected: def.expected,
    };
    check_integrity(&ds)?;
    Ok(ds)
}

fn check_integrity(ds: &NamedDataset) -> Result<()> {
    let fail = |message: String| Error::Integrity {
        name: ds.name.clone(),
        message,
    };
    let exp = &ds.expected;
    if ds.complex.facet_count() != exp.facets {
        return Err(fail(format!(
            "{} facets, expected {}",
            ds.complex.facet_count(),
            exp.facets
        )));
    }
    if let Some(f) = &exp.f_vector {
        let got = ds.complex.f_vector();
        if got != FVector(f.clone()) {
            return Err(fail(format!("f-vector {got}")));
        }
    }
    if ds.block_tag_count(Tag::Red) != exp.red_blocks
        || ds.block_tag_count(Tag::Green) != exp.green_blocks
    {
        return Err(fail("red/green tag counts differ".into()));
    }
    let blue = ds.blue_steps();
    match &ds.shelling {
        Some(order) => {
            let report = verify_shelling(order);
            if !report.valid {
                return Err(fail(format!(
                    "not a shelling at step {:?}",
                    report.failing_step
                )));
            }
            if let Some(b) = exp.blue {
                if blue.len() != b || blue != report.boundary_glued_steps {
                    return Err(fail("blue tags differ from boundary-glued steps".into()));
                }
                let h_top = ds.complex.h_vector().last();
                if order.is_complete() && h_top != b as i64 {
                    return Err(fail(format!("blue count {b} but top h-entry {h_top}")));
                }
            }
        }
        None if !blue.is_empty() => return Err(fail("colour tags on a non-shelling".into())),
        None => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_loads() {
        for name in builtin_names() {
            load_builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            load_builtin("nope"),
            Err(Error::UnknownDataset(_))
        ));
    }

    #[test]
    fn sizes() {
        let q = load_builtin("quiet8").unwrap();
        assert_eq!((q.complex.facet_count(), q.complex.n()), (21, 8));
        let a = load_builtin("austere10").unwrap();
        assert_eq!((a.complex.facet_count(), a.complex.n()), (32, 10));
        let e = load_builtin("echo16_shelling").unwrap();
        assert_eq!(e.shelling.as_ref().unwrap().len(), 280);
        assert_eq!(e.blue_steps().len(), 105);
        assert_eq!(e.block_tag_count(Tag::Red), 1);
        assert_eq!(e.block_tag_count(Tag::Green), 5);
    }
}
