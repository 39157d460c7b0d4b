"""
    Allow capverify to be executable
    through `python -m capverify`.
"""


from capverify.cli_app import main


if __name__ == '__main__':
    main()
