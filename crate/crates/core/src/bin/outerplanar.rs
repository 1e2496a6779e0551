fn main() -> std::process::ExitCode {
    outerplanar::cli::main()
}
