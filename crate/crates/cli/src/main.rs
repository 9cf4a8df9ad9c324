fn main() {
    std::process::exit(nellipse_cli::cli::run(std::env::args_os()));
}
