fn main() {
    std::process::exit(bargmann::cli::main_entry());
}
