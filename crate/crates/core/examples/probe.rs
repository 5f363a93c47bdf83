use coxgale_core::search::arcs::{search_arc, ArcSpec};
use std::time::Instant;

fn main() {
    // Table 3 rows: arc -> expected count
    let cases: &[(&str, usize)] = &[
        ("3,1,3:2", 0),
        ("3,2,2:2", 0),
        ("2,2,3:2", 0),
        ("3,1,4,1:2", 0),
        ("2,2,2:2", 1),
        ("2,3,2:2", 1),
        ("3,2,3:2", 1),
        ("4,1,3:2", 1),
        ("1,4,1:2", 3),
        ("1,3,1:2", 5),
        ("1,3,2:2", 9),
        ("2,3,1:2", 9),
    ];
    for (s, expect) in cases {
        let spec = ArcSpec::parse(s).unwrap();
        let t = Instant::now();
        let found = search_arc(&spec).unwrap();
        println!(
            "arc {:10} -> {:2} diagrams (expect {:2})  [{:?}]{}",
            s,
            found.len(),
            expect,
            t.elapsed(),
            if found.len() == *expect { "" } else { "  MISMATCH" }
        );
        if found.len() != *expect && found.len() < 12 {
            for d in &found {
                println!("    {:?}", d);
            }
        }
    }
}
