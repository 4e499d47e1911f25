use std::process::ExitCode;

fn main() -> ExitCode {
    let outcomes = g2cover_validation::run_all();
    for o in &outcomes {
        let status = if o.pass() { "PASS" } else { "FAIL" };
        let slow = if o.elapsed > o.budget { format!(" — over budget {:?}", o.budget) } else { String::new() };
        println!("{status} [{:>2}] {}: {} ({:.1?}{slow})", o.id, o.name, o.check.detail, o.elapsed);
        for note in &o.check.notes {
            println!("     info: {note}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.pass()).count();
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
