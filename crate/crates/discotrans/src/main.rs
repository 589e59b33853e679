//! The `discotrans` binary.

fn main() {
    std::process::exit(discotrans::cli::run(std::env::args_os()));
}
