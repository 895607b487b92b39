fn main() {
    std::process::exit(overabundant_cli::run(std::env::args_os()));
}
