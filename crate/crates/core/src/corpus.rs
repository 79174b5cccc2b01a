//! Built-in example complexes, addressed as `corpus:NAME`.
//!
//! Fixed entries carry an annotated f-vector. Parametric families are
//! also accepted: `gon-M`, `points-K`, `path-K`, `simplex-K`, `cross-N`,
//! `K-M-N` (complete bipartite), `susp-gon-M`.

use crate::error::{Error, Result};
use crate::simplicial::builders::*;
use crate::simplicial::FlagComplex;
use crate::sphere2::square_compose;

pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub f_vector: &'static [u64],
    /// A flag 2-sphere expected to certify.
    pub sphere2: bool,
    build: fn() -> FlagComplex,
}

impl CorpusEntry {
    pub fn build(&self) -> FlagComplex {
        (self.build)()
    }
}

fn subdivided_icosahedron() -> FlagComplex {
    subdivide_edge(&icosahedron(), "i0", "i1", "x").expect("icosahedron edge")
}

fn icosahedral_composite() -> FlagComplex {
    let s = subdivided_icosahedron();
    square_compose(&s, "x", &s, "x", None).expect("composite of flag spheres")
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry { name: "two-points", description: "0-sphere", f_vector: &[1, 2], sphere2: false, build: || points(2) },
    CorpusEntry { name: "three-points", description: "3 points", f_vector: &[1, 3], sphere2: false, build: || points(3) },
    CorpusEntry { name: "path-3", description: "path on 3 vertices", f_vector: &[1, 3, 2], sphere2: false, build: || path(3) },
    CorpusEntry { name: "square", description: "4-gon", f_vector: &[1, 4, 4], sphere2: false, build: || polygon(4) },
    CorpusEntry { name: "pentagon", description: "5-gon", f_vector: &[1, 5, 5], sphere2: false, build: || polygon(5) },
    CorpusEntry { name: "hexagon", description: "6-gon", f_vector: &[1, 6, 6], sphere2: false, build: || polygon(6) },
    CorpusEntry { name: "K3,3", description: "complete bipartite K_{3,3}", f_vector: &[1, 6, 9], sphere2: false, build: || complete_bipartite(3, 3) },
    CorpusEntry { name: "triangle", description: "2-simplex", f_vector: &[1, 3, 3, 1], sphere2: false, build: || simplex(2) },
    CorpusEntry { name: "octahedron", description: "boundary of the octahedron", f_vector: &[1, 6, 12, 8], sphere2: true, build: octahedron },
    CorpusEntry { name: "icosahedron", description: "boundary of the icosahedron", f_vector: &[1, 12, 30, 20], sphere2: true, build: icosahedron },
    CorpusEntry {
        name: "subdivided-icosahedron",
        description: "icosahedron with one edge subdivided",
        f_vector: &[1, 13, 33, 22],
        sphere2: true,
        build: subdivided_icosahedron,
    },
    CorpusEntry {
        name: "icosahedral-composite",
        description: "two subdivided icosahedra glued along the square links of the new vertices",
        f_vector: &[1, 20, 54, 36],
        sphere2: true,
        build: icosahedral_composite,
    },
    CorpusEntry { name: "susp-pentagon", description: "suspension of the 5-gon", f_vector: &[1, 7, 15, 10], sphere2: true, build: || polygon(5).suspension() },
    CorpusEntry { name: "susp-hexagon", description: "suspension of the 6-gon", f_vector: &[1, 8, 18, 12], sphere2: true, build: || polygon(6).suspension() },
    CorpusEntry {
        name: "pentagon-join-pentagon",
        description: "join of two 5-gons, a flag 3-sphere",
        f_vector: &[1, 10, 35, 50, 25],
        sphere2: false,
        build: || polygon(5).join(&polygon(5)),
    },
    CorpusEntry {
        name: "cross-4",
        description: "boundary of the 4-dimensional cross-polytope",
        f_vector: &[1, 8, 24, 32, 16],
        sphere2: false,
        build: || cross_polytope(4),
    },
];

fn family(name: &str) -> Option<Result<FlagComplex>> {
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("corpus:{name}: bad number `{s}`")));
    let parts: Vec<&str> = name.split('-').collect();
    let built = match parts.as_slice() {
        ["gon", m] => num(m).and_then(|m| {
            if m < 4 {
                Err(Error::Precondition("gon-M needs M >= 4".into()))
            } else {
                Ok(polygon(m))
            }
        }),
        ["susp", "gon", m] => num(m).and_then(|m| {
            if m < 4 {
                Err(Error::Precondition("susp-gon-M needs M >= 4".into()))
            } else {
                Ok(polygon(m).suspension())
            }
        }),
        ["points", k] => num(k).map(points),
        ["path", k] => num(k).map(path),
        ["simplex", k] => num(k).map(|k| simplex(k as isize)),
        ["cross", n] => num(n).map(cross_polytope),
        ["K", m, n] => num(m).and_then(|m| num(n).map(|n| complete_bipartite(m, n))),
        _ => return None,
    };
    Some(built)
}

/// Resolves a corpus name.
pub fn get(name: &str) -> Result<FlagComplex> {
    if let Some(e) = ENTRIES.iter().find(|e| e.name == name) {
        return Ok(e.build());
    }
    family(name).unwrap_or_else(|| Err(Error::Parse(format!("unknown corpus entry `{name}`"))))
}

/// Checks every fixed entry against its annotation. Returns one line
/// per entry and whether all passed.
pub fn check() -> (Vec<String>, bool) {
    let mut lines = Vec::new();
    let mut ok = true;
    for e in ENTRIES {
        let l = e.build();
        let f = l.f_vector();
        let mut good = f.as_slice() == e.f_vector;
        let mut note = format!("f = {f}");
        if e.sphere2 {
            match crate::sphere2::certify(&l).and_then(|c| crate::sphere2::verify(&c)) {
                Ok(s) => note.push_str(&format!(", certified ({} nodes)", s.nodes)),
                Err(err) => {
                    good = false;
                    note.push_str(&format!(", certification failed: {err}"));
                }
            }
        }
        ok &= good;
        lines.push(format!("{} {}: {note}", if good { "ok  " } else { "FAIL" }, e.name));
    }
    (lines, ok)
}
