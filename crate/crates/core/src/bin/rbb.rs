fn main() {
    std::process::exit(rbb::cli::run());
}
