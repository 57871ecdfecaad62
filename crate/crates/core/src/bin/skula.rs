use std::io::Write;

fn main() {
    let (code, out) = skula::cli::run(std::env::args_os());
    // A closed pipe downstream is not an error worth reporting.
    let _ = if code == skula::cli::EXIT_USAGE {
        writeln!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    std::process::exit(code);
}
