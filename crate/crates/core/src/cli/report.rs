//! Reports: one serializable struct rendered either as JSON or as text.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

use super::spec::{int_json, rational_json};
use crate::charpair::{all_signs, validate, CharacteristicPair};
use crate::dim4::{self, Dim4Error, HomologyProfile, IntersectionData};
use crate::exactlin::IntMatrix;
use crate::genus::{self, ChiY, GenusError};
use crate::mac;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: Option<String>,
    pub dimension: usize,
    pub facet_count: usize,
    pub vertex_count: usize,
    pub hole_count: usize,
    pub facets: Vec<FacetRow>,
    pub validation: ValidationSection,
    pub vertices: Vec<VertexRow>,
    pub chi_y: Option<ChiYSection>,
    pub dim4: Option<Dim4Section>,
    pub structure: Option<StructureSection>,
    pub moment_angle: MomentAngleSection,
}

#[derive(Debug, Clone, Serialize)]
pub struct FacetRow {
    pub id: String,
    pub label: String,
    pub component: usize,
    pub lambda: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationSection {
    pub valid: bool,
    pub faces_checked: Option<usize>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexRow {
    pub id: String,
    pub point: Vec<Value>,
    pub facets: Vec<String>,
    pub sign: Option<i32>,
    pub index: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiYSection {
    pub nu: Value,
    pub polynomial: String,
    pub coefficients: Vec<i64>,
    pub top_chern: i64,
    pub signature: i64,
    pub todd: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologySection {
    pub betti: [usize; 5],
    pub torsion: [usize; 5],
    pub cell_counts: [usize; 5],
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionSection {
    pub generators: Vec<String>,
    pub matrix: Value,
    pub signature: i64,
    pub determinant: Value,
    pub one_three_pairing: Option<i32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Dim4Section {
    pub homology: HomologySection,
    /// `None` when the number of holes is outside the supported range.
    pub intersection: Option<IntersectionSection>,
    pub c1_squared: i64,
    pub c2: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureSection {
    pub invariant_almost_complex: bool,
    pub invariant_symplectic: String,
    pub kahler_excluded: bool,
    pub complex_excluded_by_bmy: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MomentAngleSection {
    pub torus_rank: usize,
    pub kernel_basis: Value,
    pub free_action: bool,
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(int_json).collect()))
            .collect(),
    )
}

fn int_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

impl ChiYSection {
    pub fn new(chi: &ChiY) -> Self {
        let p = &chi.polynomial;
        Self {
            nu: int_list(&chi.nu.nu),
            polynomial: p.to_string(),
            coefficients: p.coefficients.clone(),
            top_chern: p.top_chern(),
            signature: p.signature(),
            todd: p.todd(),
        }
    }
}

impl HomologySection {
    pub fn new(h: &HomologyProfile) -> Self {
        Self {
            betti: h.betti,
            torsion: h.torsion,
            cell_counts: h.cell_counts,
            euler_characteristic: h.euler_characteristic(),
        }
    }
}

impl IntersectionSection {
    pub fn new(pair: &CharacteristicPair, data: &IntersectionData) -> Self {
        Self {
            generators: data.generators.iter().map(|g| g.label(pair)).collect(),
            matrix: matrix_json(&data.matrix),
            signature: data.signature(),
            determinant: int_json(&data.determinant()),
            one_three_pairing: data.one_three_pairing,
        }
    }
}

impl MomentAngleSection {
    pub fn new(pair: &CharacteristicPair) -> Self {
        let kd = mac::kernel_data(pair);
        Self {
            torus_rank: kd.torus_rank,
            kernel_basis: matrix_json(&kd.kernel_basis),
            free_action: mac::freeness_check(pair),
        }
    }
}

/// Failures that stop a report from being produced at all.
#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error(transparent)]
    Dim4(#[from] Dim4Error),
}

impl Report {
    /// Builds the full report. An invalid pair still yields a report with
    /// only the combinatorial and kernel sections filled in.
    pub fn build(name: Option<String>, pair: CharacteristicPair, nu: Option<&[BigInt]>) -> Result<Self, ReportError> {
        let body = pair.body().clone();
        let facets = body
            .facet_ids()
            .map(|f| FacetRow {
                id: f.to_string(),
                label: body.facet_label(f),
                component: body.locate_facet(f).0,
                lambda: int_list(pair.lambda(f)),
            })
            .collect();
        let moment_angle = MomentAngleSection::new(&pair);
        let (validation, pair) = match validate(&pair) {
            Ok(r) => (
                ValidationSection {
                    valid: true,
                    faces_checked: Some(r.faces_checked),
                    error: None,
                },
                Some(pair.validated().expect("just validated")),
            ),
            Err(e) => (
                ValidationSection {
                    valid: false,
                    faces_checked: None,
                    error: Some(e.to_string()),
                },
                None,
            ),
        };

        let mut report = Report {
            name,
            dimension: body.dim(),
            facet_count: body.facet_count(),
            vertex_count: body.vertex_count(),
            hole_count: body.hole_count(),
            facets,
            validation,
            vertices: Vec::new(),
            chi_y: None,
            dim4: None,
            structure: None,
            moment_angle,
        };
        let label_list = |fs: Vec<crate::FacetId>| fs.into_iter().map(|f| body.facet_label(f)).collect();
        let Some(pair) = pair else {
            report.vertices = body
                .vertex_ids()
                .map(|v| VertexRow {
                    id: v.to_string(),
                    point: body.vertex_point(v).coords().iter().map(rational_json).collect(),
                    facets: label_list(body.vertex_facets(v)),
                    sign: None,
                    index: None,
                })
                .collect();
            return Ok(report);
        };

        let chi = genus::chi_y(&pair, nu)?;
        let signs = all_signs(&pair).map_err(GenusError::from)?;
        report.vertices = body
            .vertex_ids()
            .map(|v| VertexRow {
                id: v.to_string(),
                point: body.vertex_point(v).coords().iter().map(rational_json).collect(),
                facets: label_list(body.vertex_facets(v)),
                sign: Some(signs[&v]),
                index: Some(chi.indices[&v]),
            })
            .collect();
        report.chi_y = Some(ChiYSection::new(&chi));

        if pair.dim() == 2 {
            let homology = HomologySection::new(&dim4::homology_groups(&pair)?);
            let intersection = match dim4::intersection_form(&pair) {
                Ok(data) => Some(IntersectionSection::new(&pair, &data)),
                Err(Dim4Error::Scope(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let c2 = homology.euler_characteristic;
            let c1_squared = 2 * c2 + 3 * chi.polynomial.signature();
            report.dim4 = Some(Dim4Section {
                homology,
                intersection,
                c1_squared,
                c2,
            });
        }
        let flags = dim4::structure_flags(&pair)?;
        report.structure = Some(StructureSection {
            invariant_almost_complex: flags.invariant_almost_complex,
            invariant_symplectic: flags.invariant_symplectic.to_string(),
            kahler_excluded: flags.kahler_excluded,
            complex_excluded_by_bmy: flags.complex_excluded_by_bmy,
        });
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        if let Some(name) = &self.name {
            line(w, "name", name);
        }
        line(w, "dimension", self.dimension);
        line(w, "facets", self.facet_count);
        line(w, "vertices", self.vertex_count);
        line(w, "holes", self.hole_count);
        match (&self.validation.valid, &self.validation.error) {
            (true, _) => line(
                w,
                "validation",
                format!("valid ({} faces checked)", self.validation.faces_checked.unwrap_or(0)),
            ),
            (false, e) => line(w, "validation", format!("invalid: {}", e.as_deref().unwrap_or(""))),
        }
        writeln!(w, "\nfacets:").unwrap();
        for f in &self.facets {
            writeln!(w, "  {:<5} {:<12} component {}  lambda {}", f.id, f.label, f.component, compact(&f.lambda)).unwrap();
        }
        writeln!(w, "\nvertices:").unwrap();
        for v in &self.vertices {
            let point: Vec<String> = v.point.iter().map(plain).collect();
            write!(w, "  {:<5} ({})  [{}]", v.id, point.join(", "), v.facets.join(", ")).unwrap();
            if let Some(s) = v.sign {
                write!(w, "  sign {}", if s > 0 { "+1" } else { "-1" }).unwrap();
            }
            if let Some(i) = v.index {
                write!(w, "  index {i}").unwrap();
            }
            writeln!(w).unwrap();
        }
        if let Some(c) = &self.chi_y {
            writeln!(w).unwrap();
            w.push_str(&c.to_text());
        }
        if let Some(d) = &self.dim4 {
            writeln!(w).unwrap();
            w.push_str(&d.homology.to_text());
            writeln!(w).unwrap();
            match &d.intersection {
                Some(i) => w.push_str(&i.to_text()),
                None => writeln!(w, "intersection form: not computed for {} holes", self.hole_count).unwrap(),
            }
            writeln!(w).unwrap();
            line(w, "c1^2", d.c1_squared);
            line(w, "c2", d.c2);
        }
        if let Some(s) = &self.structure {
            writeln!(w, "\nstructure:").unwrap();
            line(w, "  invariant almost complex", yes_no(s.invariant_almost_complex));
            line(w, "  invariant symplectic", &s.invariant_symplectic);
            line(w, "  kahler excluded", yes_no(s.kahler_excluded));
            line(w, "  complex excluded by BMY", yes_no(s.complex_excluded_by_bmy));
        }
        writeln!(w).unwrap();
        w.push_str(&self.moment_angle.to_text());
        out
    }
}

impl ChiYSection {
    pub fn to_text(&self) -> String {
        let mut w = String::new();
        line(&mut w, "chi_y", &self.polynomial);
        line(&mut w, "  nu", compact(&self.nu));
        line(&mut w, "  coefficients", format!("{:?}", self.coefficients));
        line(&mut w, "  top chern number (y = -1)", self.top_chern);
        line(&mut w, "  signature (y = 1)", self.signature);
        line(&mut w, "  todd genus (y = 0)", self.todd);
        w
    }
}

impl HomologySection {
    pub fn to_text(&self) -> String {
        let mut w = String::new();
        let row = |v: &[usize; 5]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(w, "homology (degrees 0..4):").unwrap();
        line(&mut w, "  betti", row(&self.betti));
        line(&mut w, "  torsion", row(&self.torsion));
        line(&mut w, "  cells", row(&self.cell_counts));
        line(&mut w, "  euler characteristic", self.euler_characteristic);
        w
    }
}

impl IntersectionSection {
    pub fn to_text(&self) -> String {
        let mut w = String::new();
        writeln!(w, "intersection form:").unwrap();
        line(&mut w, "  generators", self.generators.join(", "));
        if let Value::Array(rows) = &self.matrix {
            for r in rows {
                let cells: Vec<String> = r.as_array().into_iter().flatten().map(|x| format!("{:>3}", plain(x))).collect();
                writeln!(w, "    {}", cells.join(" ")).unwrap();
            }
        }
        line(&mut w, "  signature", self.signature);
        line(&mut w, "  determinant", plain(&self.determinant));
        if let Some(p) = self.one_three_pairing {
            line(&mut w, "  H1 x H3 pairing", p);
        }
        w
    }
}

impl MomentAngleSection {
    pub fn to_text(&self) -> String {
        let mut w = String::new();
        writeln!(w, "moment-angle:").unwrap();
        line(&mut w, "  kernel torus rank", self.torus_rank);
        writeln!(w, "  kernel basis (columns):").unwrap();
        if let Value::Array(rows) = &self.kernel_basis {
            for r in rows {
                let cells: Vec<String> = r.as_array().into_iter().flatten().map(|x| format!("{:>3}", plain(x))).collect();
                writeln!(w, "    {}", cells.join(" ")).unwrap();
            }
        }
        line(&mut w, "  free action", yes_no(self.free_action));
        w
    }
}

fn line(w: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(w, "{key}: {value}").unwrap();
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A JSON scalar without string quotes.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(xs) => format!("({})", xs.iter().map(plain).collect::<Vec<_>>().join(", ")),
        other => plain(other),
    }
}
