fn main() {
    std::process::exit(twosquirrel::cli::run());
}
