fn main() {
    std::process::exit(fullrank::cli::run(std::env::args_os()));
}
