//! Reading a JSON spec and producing a full report.

use tmh::cli::report::Report;
use tmh::cli::spec::SpecDocument;

const SPEC: &str = r#"{
  "dimension": 2,
  "name": "hexagon",
  "outer": {"vertices": [[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]]},
  "characteristic": {
    "F1": [0, 1], "F2": [-1, 1], "F3": [-1, 0],
    "F4": [0, -1], "F5": [1, -1], "F6": [1, 0]
  },
  "nu": [3, 1]
}"#;

fn main() {
    let doc = SpecDocument::parse_str(SPEC).unwrap();
    let pair = doc.to_pair().unwrap();
    let report = Report::build(doc.name.clone(), pair, doc.nu.as_deref()).unwrap();
    print!("{}", report.to_text());
    println!("\nas JSON, chi_y section: {}", serde_json::to_string(&report.chi_y).unwrap());

    let broken = SPEC.replace("\"F1\": [0, 1]", "\"F1\": [0.5, 1]");
    println!("\nwith a decimal vector entry: {}", SpecDocument::parse_str(&broken).unwrap_err());
}
