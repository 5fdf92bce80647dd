fn main() {
    std::process::exit(orthoclone::cli::run(std::env::args_os()));
}
