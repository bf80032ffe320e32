fn main() {
    std::process::exit(topoidx::cli::run(std::env::args_os()));
}
