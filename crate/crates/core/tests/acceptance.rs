mod support;

fn main() {
    let outcomes = support::all_criteria();
    let mut failed = 0;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{status} [{}] {} ({:.2}s): {}", o.id, o.title, o.elapsed.as_secs_f64(), o.detail);
        failed += !o.passed as usize;
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
