fn main() {
    std::process::exit(multispace::cli::run(std::env::args_os()));
}
