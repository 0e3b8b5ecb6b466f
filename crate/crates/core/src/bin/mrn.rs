fn main() {
    std::process::exit(multiramsey::cli::run(std::env::args()));
}
