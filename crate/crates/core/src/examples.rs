//! The worked example structures, their character labels, and the
//! figures as labelled posets.

use crate::characters::{enumerate_characters, label, specialization_poset, Character};
use crate::error::{Error, Result};
use crate::fan::{make_fan, require_condition_z};
use crate::order::{hasse_dot, repr_poset, Poset};
use crate::presentation::Presentation;
use crate::three::Three;
use crate::ts_core::FiniteTs;

/// The example structures.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Example {
    Three,
    F1,
    F1Idem,
    F2,
    F3,
    F4,
}

impl Example {
    pub const ALL: [Example; 6] = [Example::Three, Example::F1, Example::F1Idem, Example::F2, Example::F3, Example::F4];

    pub fn name(self) -> &'static str {
        match self {
            Example::Three => "three",
            Example::F1 => "f1",
            Example::F1Idem => "f1-idem",
            Example::F2 => "f2",
            Example::F3 => "f3",
            Example::F4 => "f4",
        }
    }

    pub fn from_name(name: &str) -> Result<Example> {
        Example::ALL
            .into_iter()
            .find(|e| e.name() == name)
            .ok_or_else(|| Error::Precondition(format!("unknown example `{name}`")))
    }

    pub fn presentation(self) -> Presentation {
        let with =
            |p: Presentation, rels: &[&str]| rels.iter().fold(p, |p, r| p.with(r).expect("example relations parse"));
        let xyz = || Presentation::new(&["x", "y", "z"]);
        let f2 = ["x^2 = y^2", "x^2 z^2 = x^2", "y^2 z^2 = x^2"];
        match self {
            Example::Three => Presentation::new(&[]),
            Example::F1 => Presentation::new(&["x"]),
            Example::F1Idem => with(Presentation::new(&["x"]), &["x^2 = x"]),
            Example::F2 => with(xyz(), &f2),
            Example::F3 => with(with(xyz(), &f2), &["x z = x"]),
            Example::F4 => with(with(xyz(), &f2), &["x z = x", "z^2 = 1"]),
        }
    }

    pub fn build(self) -> FiniteTs {
        self.presentation().build().expect("example presentations are not degenerate")
    }

    /// Elements as listed in the worked examples.
    pub fn listed_elements(self) -> &'static [&'static str] {
        match self {
            Example::Three => &["1", "0", "−1"],
            Example::F1 => &["1", "0", "−1", "x", "−x", "x²", "−x²"],
            Example::F1Idem => &["1", "0", "−1", "x", "−x"],
            Example::F2 => &[
                "1", "0", "−1", "x", "−x", "y", "−y", "z", "−z", "x²", "−x²", "z²", "−z²", "xy", "−xy", "xz", "−xz",
                "yz", "−yz", "x²z", "−x²z", "xyz", "−xyz",
            ],
            Example::F3 => &["1", "0", "−1", "x", "−x", "y", "−y", "z", "−z", "x²", "−x²", "z²", "−z²", "xy", "−xy"],
            Example::F4 => &["1", "0", "−1", "x", "−x", "y", "−y", "z", "−z", "x²", "−x²", "xy", "−xy"],
        }
    }

    pub fn expected_characters(self) -> usize {
        match self {
            Example::Three => 1,
            Example::F1 => 3,
            Example::F1Idem => 2,
            Example::F2 => 11,
            Example::F3 => 7,
            Example::F4 => 6,
        }
    }
}

pub fn three() -> FiniteTs {
    Example::Three.build()
}

pub fn f1() -> FiniteTs {
    Example::F1.build()
}

pub fn f1_idem() -> FiniteTs {
    Example::F1Idem.build()
}

pub fn f2() -> FiniteTs {
    Example::F2.build()
}

pub fn f3() -> FiniteTs {
    Example::F3.build()
}

pub fn f4() -> FiniteTs {
    Example::F4.build()
}

fn generator_values(ts: &FiniteTs, h: &Character) -> Vec<Three> {
    ts.generator_images().iter().map(|&g| h.value(g)).collect()
}

/// Labels `h1, h2, …` for the characters `x` of an example.  Structures on
/// `x, y, z` are labelled by matching generator values against the
/// characters of `F₂`, so the labels of `F₃` and `F₄` agree with those of
/// `F₂`; everything else gets the canonical labels.
pub fn character_labels(ex: Example, ts: &FiniteTs, x: &[Character]) -> Vec<String> {
    match ex {
        Example::F2 | Example::F3 | Example::F4 => {
            let base = f2();
            let base_vals: Vec<Vec<Three>> =
                enumerate_characters(&base).iter().map(|h| generator_values(&base, h)).collect();
            x.iter()
                .enumerate()
                .map(|(i, h)| {
                    let v = generator_values(ts, h);
                    base_vals.iter().position(|b| *b == v).map_or_else(|| label(i), label)
                })
                .collect()
        }
        _ => (0..x.len()).map(label).collect(),
    }
}

/// `card(F) = 2·|X_F| + 1`.
pub fn cardinality_relation(ts: &FiniteTs) -> Result<bool> {
    require_condition_z(ts)?;
    Ok(ts.len() == 2 * enumerate_characters(ts).len() + 1)
}

/// Which order a figure shows.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FigureKind {
    Specialization,
    Representation,
}

/// The six figures.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub id: &'static str,
    pub example: Example,
    pub kind: FigureKind,
    pub golden: &'static str,
}

pub const FIGURES: [Figure; 8] = [
    Figure {
        id: "fig1_spec",
        example: Example::F1,
        kind: FigureKind::Specialization,
        golden: include_str!("../data/v1/golden/fig1_spec.txt"),
    },
    Figure {
        id: "fig1_repr",
        example: Example::F1,
        kind: FigureKind::Representation,
        golden: include_str!("../data/v1/golden/fig1_repr.txt"),
    },
    Figure {
        id: "fig2_spec",
        example: Example::F1Idem,
        kind: FigureKind::Specialization,
        golden: include_str!("../data/v1/golden/fig2_spec.txt"),
    },
    Figure {
        id: "fig2_repr",
        example: Example::F1Idem,
        kind: FigureKind::Representation,
        golden: include_str!("../data/v1/golden/fig2_repr.txt"),
    },
    Figure {
        id: "fig3_spec",
        example: Example::F2,
        kind: FigureKind::Specialization,
        golden: include_str!("../data/v1/golden/fig3_spec.txt"),
    },
    Figure {
        id: "fig4_repr",
        example: Example::F2,
        kind: FigureKind::Representation,
        golden: include_str!("../data/v1/golden/fig4_repr.txt"),
    },
    Figure {
        id: "fig5_spec",
        example: Example::F4,
        kind: FigureKind::Specialization,
        golden: include_str!("../data/v1/golden/fig5_spec.txt"),
    },
    Figure {
        id: "fig6_repr",
        example: Example::F4,
        kind: FigureKind::Representation,
        golden: include_str!("../data/v1/golden/fig6_repr.txt"),
    },
];

/// A poset with the labels used in the figures.
pub fn labelled_poset(ex: Example, kind: FigureKind) -> Result<(Poset, Vec<String>)> {
    let ts = ex.build();
    match kind {
        FigureKind::Specialization => {
            let x = enumerate_characters(&ts);
            let labels = character_labels(ex, &ts, &x);
            Ok((specialization_poset(&x), labels))
        }
        FigureKind::Representation => {
            let f = make_fan(&ts)?;
            Ok((repr_poset(&f)?, ts.names().to_vec()))
        }
    }
}

/// Sorted `node` and `edge lower upper` lines; the golden-file format.
pub fn poset_text(p: &Poset, labels: &[String]) -> String {
    let mut nodes: Vec<String> = labels.iter().take(p.len()).map(|l| format!("node {l}")).collect();
    nodes.sort();
    let mut edges: Vec<String> =
        p.hasse_edges().into_iter().map(|(a, b)| format!("edge {} {}", labels[a], labels[b])).collect();
    edges.sort();
    let mut out = String::new();
    for line in nodes.into_iter().chain(edges) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

impl Figure {
    pub fn compute(&self) -> Result<String> {
        let (p, labels) = labelled_poset(self.example, self.kind)?;
        Ok(poset_text(&p, &labels))
    }

    pub fn matches(&self) -> Result<bool> {
        Ok(self.compute()? == self.golden)
    }

    pub fn dot(&self) -> Result<String> {
        let (p, labels) = labelled_poset(self.example, self.kind)?;
        Ok(hasse_dot(&p, &labels, self.id))
    }
}

pub fn figure(id: &str) -> Option<&'static Figure> {
    FIGURES.iter().find(|f| f.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn element_lists_and_counts() {
        for ex in Example::ALL {
            let ts = ex.build();
            let names: BTreeSet<&str> = ts.names().iter().map(String::as_str).collect();
            let listed: BTreeSet<&str> = ex.listed_elements().iter().copied().collect();
            assert_eq!(names, listed, "{}", ex.name());
            assert_eq!(ts.len(), ex.listed_elements().len());
            assert_eq!(enumerate_characters(&ts).len(), ex.expected_characters(), "{}", ex.name());
            assert!(ts.satisfies_condition_z());
            assert!(cardinality_relation(&ts).unwrap());
        }
    }

    #[test]
    fn f2_labels_follow_z() {
        let ts = f2();
        let x = enumerate_characters(&ts);
        let z = ts.elem("z").unwrap();
        let labels = character_labels(Example::F2, &ts, &x);
        assert_eq!(labels, (0..11).map(label).collect::<Vec<_>>());
        for (h, l) in x.iter().zip(&labels) {
            let n: usize = l[1..].parse().unwrap();
            let expect = match n {
                1 => Three::Zero,
                2 | 4..=7 => Three::One,
                _ => Three::MinusOne,
            };
            assert_eq!(h.value(z), expect, "{l}");
        }
    }

    #[test]
    fn f4_labels_skip_h1() {
        let ts = f4();
        let x = enumerate_characters(&ts);
        let labels = character_labels(Example::F4, &ts, &x);
        assert_eq!(labels, vec!["h2", "h3", "h4", "h5", "h6", "h7"]);
    }

    #[test]
    fn figures_match() {
        for fig in &FIGURES {
            assert_eq!(fig.compute().unwrap(), fig.golden, "{}", fig.id);
        }
    }

    #[test]
    fn names_accept_ascii() {
        assert_eq!(Example::from_name("f1-idem").unwrap(), Example::F1Idem);
        assert!(Example::from_name("f5").is_err());
    }
}
