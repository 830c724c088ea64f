fn main() {
    std::process::exit(geronimus::cli::run(std::env::args_os()));
}
