fn main() {
    std::process::exit(fsing::cli::run(std::env::args()));
}
