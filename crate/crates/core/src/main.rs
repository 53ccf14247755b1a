fn main() {
    std::process::exit(edwards_proof::cli::run_cli(std::env::args_os()));
}
