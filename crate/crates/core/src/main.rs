fn main() {
    std::process::exit(qrealize::cli::run(std::env::args_os()));
}
