//! One line per acceptance criterion. Each check is exact; a failure is
//! tolerated only when every difference is a documented erratum.

use std::process::ExitCode;

use jacobi_designs::verify;

fn main() -> ExitCode {
    let criteria = match verify::run_all() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("acceptance checks did not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    print!("{}", verify::report(&criteria));
    let unexplained: Vec<_> = criteria.iter().filter(|c| !c.passed && !c.explained).map(|c| c.id).collect();
    // Exact reproduction of the printed tables is the one known failure.
    let failed: Vec<_> = criteria.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    if !unexplained.is_empty() || !(failed.is_empty() || failed == [8]) {
        eprintln!("unexpected failures: {failed:?} (unexplained: {unexplained:?})");
        return ExitCode::FAILURE;
    }
    println!("acceptance: only documented failures ({failed:?})");
    ExitCode::SUCCESS
}
