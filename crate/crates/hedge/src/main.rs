fn main() {
    std::process::exit(hedge::cli::run(std::env::args()));
}
