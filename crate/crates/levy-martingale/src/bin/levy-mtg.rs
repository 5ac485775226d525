//! Thin command-line wrapper around the library's `cli` module.

fn main() {
    std::process::exit(levy_martingale::cli::run(std::env::args()));
}
