fn main() {
    std::process::exit(ajcable::cli::run(std::env::args()));
}
