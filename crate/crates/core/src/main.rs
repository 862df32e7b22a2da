fn main() {
    std::process::exit(tropical_stiefel::cli::run(std::env::args_os()));
}
