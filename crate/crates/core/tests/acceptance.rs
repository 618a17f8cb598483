use hopfk::acceptance::{run, TITLES};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for id in 1..=TITLES.len() as u8 {
        let start = std::time::Instant::now();
        let r = run(id, 0);
        println!("{r} ({:.2?})", start.elapsed());
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
